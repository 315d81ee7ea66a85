#pragma once

// Shared plumbing for the per-section check files.

#include "vpv/audit.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace vpv::audit::detail {

using vpv::to_string;
using audit::to_string;

void add_dirichlet_checks(std::vector<IdentityCheck>& out);
void add_lattice_checks(std::vector<IdentityCheck>& out);
void add_jordan_checks(std::vector<IdentityCheck>& out);
void add_summation_checks(std::vector<IdentityCheck>& out);
void add_bracket_checks(std::vector<IdentityCheck>& out);
void add_theta_checks(std::vector<IdentityCheck>& out);

/// Generator for one check: the audit seed mixed with the check id, so that adding a
/// check does not disturb the draws of the others.
std::mt19937_64 rng_for(std::uint64_t seed, std::string_view id);

/// "%.6e"
std::string sci(double v);
/// "%.17g"
std::string num(double v);

/// Tracks the worst residual and keeps up to a few samples.
class Recorder {
 public:
  explicit Recorder(std::size_t max_samples = 4) : max_samples_(max_samples) {}

  void residual(double r);
  void sample(std::string label, std::string lhs, std::string rhs);
  void sample(std::string label, double lhs, double rhs);

  double max_residual() const { return max_residual_; }
  /// Fills samples and max_residual of the outcome.
  void into(Outcome& out) const;

 private:
  std::size_t max_samples_;
  double max_residual_ = 0.0;
  std::vector<Sample> samples_;
};

/// |a - b| of exact values, as a double.
double exact_gap(const Rational& a, const Rational& b);

}  // namespace vpv::audit::detail
