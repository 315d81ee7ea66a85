#pragma once

// Registry of executable checks, one per numbered statement, and the audit report.

#include "vpv/exact.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vpv::audit {

enum class Status {
  Pass,                ///< holds as printed
  FailsAsPrinted,      ///< a machine-checked counterexample refutes the display
  PassWithCorrection,  ///< a typographical repair holds; the literal reading is recorded
  Flagged,             ///< the display cannot be parsed into a check
  Skipped,             ///< convergence not established for the requested regime
};

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view text);

struct Sample {
  std::string label;
  std::string lhs;
  std::string rhs;
};

/// What a single check produced.
struct Outcome {
  Status status = Status::Pass;
  std::string params;
  std::vector<Sample> samples;
  double max_residual = 0.0;
  std::string counterexample;
  std::string corrected_form;
  std::string notes;
};

struct IdentityCheck {
  std::string id;
  /// Short verbatim quote locating the statement in the source text.
  std::string anchor;
  std::string params;
  std::string procedure;
  Status expected = Status::Pass;
  /// "[DERIVED: ...]" or "[TRIVIAL: ...]".
  std::string provenance;
  std::function<Outcome(std::uint64_t seed)> run;
};

/// Orders "eq-4.9" before "eq-4.10" and "cor-5.15a" before "cor-5.15b".
bool natural_less(std::string_view a, std::string_view b);

/// All checks, sorted with natural_less.
const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_check(std::string_view id);

struct ReportEntry {
  std::string id;
  std::string anchor;
  Status expected = Status::Pass;
  Status status = Status::Pass;
  std::string params;
  std::vector<Sample> samples;
  double max_residual = 0.0;
  std::string counterexample;
  std::string corrected_form;
  std::string notes;

  bool as_expected() const { return status == expected; }
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::string version;
  std::vector<ReportEntry> entries;

  bool all_as_expected() const;
  std::size_t count(Status s) const;
};

std::string version();

/// Runs the named checks (all of them when ids is empty). Unknown ids throw UsageError.
/// threads = 0 picks the hardware concurrency; the report does not depend on it.
AuditReport run_audit(std::span<const std::string> ids, std::uint64_t seed, unsigned threads = 0);

std::string to_text(const AuditReport& report);
std::string to_json(const AuditReport& report);
/// Inverse of to_json; UsageError on malformed input.
AuditReport from_json(std::string_view text);

// ---------------------------------------------------------------- relation discovery

using ArithmeticFunction = std::function<Rational(std::uint64_t)>;

struct Discovery {
  /// Coefficients c with target(k) = sum_i c_i basis_i(k), when one was found and verified.
  std::optional<std::vector<Rational>> coefficients;
  /// Solution of the fit system, even if verification failed.
  std::vector<Rational> fitted;
  /// First k where the fitted relation fails, 0 if none.
  std::uint64_t first_failure = 0;
  bool singular = false;
  std::string message;
};

/// Solves the exact linear system on k_fit and verifies it for min(k_fit) <= k <= k_verify_max.
/// UsageError when k_fit has duplicates or fewer points than the basis.
Discovery discover_linear_relation(const ArithmeticFunction& target, const std::vector<ArithmeticFunction>& basis,
                                   std::span<const std::uint64_t> k_fit, std::uint64_t k_verify_max);

}  // namespace vpv::audit
