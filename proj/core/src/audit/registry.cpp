#include "audit/checks.hpp"

#include "vpv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace vpv::audit {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::FailsAsPrinted: return "FAILS_AS_PRINTED";
    case Status::PassWithCorrection: return "PASS_WITH_CORRECTION";
    case Status::Flagged: return "FLAGGED";
    case Status::Skipped: return "SKIPPED";
  }
  return "PASS";
}

std::optional<Status> parse_status(std::string_view text) {
  for (auto s : {Status::Pass, Status::FailsAsPrinted, Status::PassWithCorrection, Status::Flagged, Status::Skipped})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      // compare digit runs by value: strip leading zeros, then length, then text
      auto ra = a.substr(i, i2 - i), rb = b.substr(j, j2 - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> out;
    detail::add_dirichlet_checks(out);
    detail::add_lattice_checks(out);
    detail::add_jordan_checks(out);
    detail::add_summation_checks(out);
    detail::add_bracket_checks(out);
    detail::add_theta_checks(out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return natural_less(x.id, y.id); });
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i].id == out[i - 1].id) throw ConsistencyError("duplicate registry id " + out[i].id);
    return out;
  }();
  return checks;
}

const IdentityCheck* find_check(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

namespace detail {

std::mt19937_64 rng_for(std::uint64_t seed, std::string_view id) {
  // FNV-1a of the id
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Recorder::residual(double r) {
  if (std::isnan(r)) r = INFINITY;
  max_residual_ = std::max(max_residual_, r);
}

void Recorder::sample(std::string label, std::string lhs, std::string rhs) {
  if (samples_.size() < max_samples_) samples_.push_back({std::move(label), std::move(lhs), std::move(rhs)});
}

void Recorder::sample(std::string label, double lhs, double rhs) { sample(std::move(label), num(lhs), num(rhs)); }

void Recorder::into(Outcome& out) const {
  out.samples = samples_;
  out.max_residual = max_residual_;
}

double exact_gap(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return std::fabs(d.get_d());
}

}  // namespace detail
}  // namespace vpv::audit
