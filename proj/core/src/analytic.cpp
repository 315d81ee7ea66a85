#include "vpv/analytic.hpp"

#include "vpv/errors.hpp"
#include "vpv/exact.hpp"
#include "vpv/totients.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace vpv {

TruncationControl::TruncationControl(std::uint64_t max_index_, double tolerance_)
    : max_index(max_index_), tolerance(tolerance_) {
  if (max_index < 2) throw UsageError("truncation cutoff must be >= 2");
  if (!(tolerance > 0.0 && tolerance < 1.0)) throw UsageError("truncation tolerance must lie in (0, 1)");
}

namespace {

constexpr std::uint64_t kZetaCutoff = 10'000;
constexpr int kZetaCorrections = 4;

// B_{2j} / (2j)! for j = 1..5
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0};

double rising(double s, int r) {
  double out = 1.0;
  for (int i = 0; i < r; ++i) out *= s + i;
  return out;
}

double zeta_at_cutoff(double s, std::uint64_t N) {
  // Small terms first, compensated.
  double sum = 0.0, carry = 0.0;
  for (std::uint64_t n = N - 1; n >= 1; --n) {
    const double y = std::pow(static_cast<double>(n), -s) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  const double Nd = static_cast<double>(N);
  double tail = std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -s);
  for (int j = 1; j <= kZetaCorrections; ++j)
    tail += kBernoulliOverFactorial[j - 1] * rising(s, 2 * j - 1) * std::pow(Nd, -s - 2 * j + 1);
  return sum + tail;
}

std::uint64_t gcd_of(std::span<const std::int64_t> n) {
  std::uint64_t g = 0;
  for (auto v : n) g = std::gcd(g, static_cast<std::uint64_t>(v < 0 ? -v : v));
  return g;
}

}  // namespace

double zeta_error_bound(double s, std::uint64_t cutoff) {
  const int j = kZetaCorrections + 1;
  return std::abs(kBernoulliOverFactorial[j - 1] * rising(s, 2 * j - 1) *
                  std::pow(static_cast<double>(cutoff), -s - 2 * j + 1));
}

double zeta(double s, double tol) {
  if (!(s > 1.0)) throw DomainError("zeta: s must be > 1");
  if (!(tol > 0.0)) throw UsageError("zeta: tolerance must be positive");
  std::uint64_t N = kZetaCutoff;
  while (zeta_error_bound(s, N) > tol && N < 100 * kZetaCutoff) N *= 2;
  return zeta_at_cutoff(s, N);
}

DirichletComparison dirichlet_partial_cohen(double s, std::span<const std::int64_t> n, std::uint64_t K) {
  if (n.empty()) throw UsageError("dirichlet_partial_cohen: n must be non-empty");
  if (!(s > 0.0)) throw DomainError("dirichlet_partial_cohen: s must be > 0");
  if (K == 0) throw UsageError("dirichlet_partial_cohen: K must be >= 1");
  const std::uint64_t g = gcd_of(n);
  if (g == 0) throw DomainError("dirichlet_partial_cohen: gcd(n) = 0, the divisor sum diverges");

  double partial = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    const Integer c = ramanujan_cohen(k, n);
    if (c == 0) continue;
    partial += c.get_d() * std::pow(static_cast<double>(k), -(s + 1.0));
  }
  const double exponent = static_cast<double>(n.size()) - 1.0 - s;
  double sig = 0.0;
  for (auto d : divisors(g)) sig += std::pow(static_cast<double>(d), exponent);
  const double target = sig / zeta(s + 1.0);
  return {partial, target, std::abs(partial - target)};
}

double moebius_harmonic_partial(std::uint64_t x) {
  double sum = 0.0;
  for (std::uint64_t d = 1; d <= x; ++d)
    if (const int mu = moebius(d)) sum += mu / static_cast<double>(d);
  return sum;
}

double ramanujan_mean_zero(std::span<const std::int64_t> n, std::uint64_t K) {
  if (n.empty()) throw UsageError("ramanujan_mean_zero: n must be non-empty");
  if (K == 0) throw UsageError("ramanujan_mean_zero: K must be >= 1");
  const std::uint64_t g = gcd_of(n);
  if (g == 0) throw DomainError("ramanujan_mean_zero: gcd(n) = 0, the series diverges");

  // prefix[x] = sum_{d<=x} mu(d)/d
  std::vector<double> prefix(K + 1, 0.0);
  for (std::uint64_t d = 1; d <= K; ++d) prefix[d] = prefix[d - 1] + moebius(d) / static_cast<double>(d);

  const auto m = static_cast<double>(n.size());
  double sum = 0.0;
  for (auto e : divisors(g)) {
    if (e > K) break;
    sum += std::pow(static_cast<double>(e), m - 1.0) * prefix[K / e];
  }
  return sum;
}

double ramanujan_mean_direct(std::span<const std::int64_t> n, std::uint64_t K) {
  if (n.empty()) throw UsageError("ramanujan_mean_direct: n must be non-empty");
  if (K == 0) throw UsageError("ramanujan_mean_direct: K must be >= 1");
  if (gcd_of(n) == 0) throw DomainError("ramanujan_mean_direct: gcd(n) = 0, the series diverges");
  double sum = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k) sum += ramanujan_cohen(k, n).get_d() / static_cast<double>(k);
  return sum;
}

}  // namespace vpv
