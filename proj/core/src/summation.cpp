#include "vpv/engine.hpp"

#include "vpv/errors.hpp"
#include "vpv/totients.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vpv {

// ---------------------------------------------------------------- FiniteSequence

FiniteSequence::FiniteSequence(std::uint64_t bound) : bound_(bound) {
  if (bound == 0) throw UsageError("sequence bound must be >= 1");
}

FiniteSequence::FiniteSequence(std::uint64_t bound, const std::map<std::uint64_t, Rational>& values)
    : FiniteSequence(bound) {
  for (const auto& [k, v] : values) set(k, v);
}

FiniteSequence FiniteSequence::indicator(std::uint64_t bound, std::uint64_t k) {
  FiniteSequence out(bound);
  out.set(k, 1);
  return out;
}

FiniteSequence FiniteSequence::constant(std::uint64_t bound, const Rational& value) {
  FiniteSequence out(bound);
  for (std::uint64_t k = 1; k <= bound; ++k) out.set(k, value);
  return out;
}

Rational FiniteSequence::operator[](std::uint64_t k) const {
  const auto it = values_.find(k);
  return it == values_.end() ? Rational(0) : it->second;
}

void FiniteSequence::set(std::uint64_t k, const Rational& value) {
  if (k < 1 || k > bound_)
    throw UsageError("sequence index " + std::to_string(k) + " outside [1, " + std::to_string(bound_) + "]");
  if (value == 0)
    values_.erase(k);
  else
    values_[k] = value;
}

Rational tail_sum(const FiniteSequence& a, std::uint64_t k) {
  if (k == 0) throw UsageError("tail_sum: k must be >= 1");
  Rational s = 0;
  for (std::uint64_t i = k; i <= a.bound(); i += k) s += a[i];
  return s;
}

FiniteSequence random_sequence(std::mt19937_64& rng, std::uint64_t bound, std::uint64_t support_size,
                               long max_num, long max_den, bool allow_zero) {
  if (max_num < 1 || max_den < 1) throw UsageError("random_sequence: value ranges must be >= 1");
  FiniteSequence out(bound);
  std::vector<std::uint64_t> idx(bound);
  std::iota(idx.begin(), idx.end(), 1);
  // Raw engine output reduced by modulo, so the stream is identical on every platform.
  for (std::uint64_t i = bound; i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
  idx.resize(std::min(bound, support_size));
  std::sort(idx.begin(), idx.end());
  for (auto k : idx) {
    long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_num + 1)) - max_num;
    if (num == 0 && !allow_zero) num = 1;
    const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
    out.set(k, make_rational(num, den));
  }
  return out;
}

// ---------------------------------------------------------------- identities

namespace {

double to_double(const Rational& r) { return r.get_d(); }

SummationSides finish(double lhs, double rhs, double scale) {
  return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, scale)};
}

// (1 - e^{t}) / (1 - e^{t/k}), the printed left factor
double window_ratio(double t, std::uint64_t k) {
  return std::expm1(t) / std::expm1(t / static_cast<double>(k));
}

void require_nonvanishing(double t, std::uint64_t k) {
  if (t == 0.0)
    throw DomainError("vanishing denominator 1 - exp(b_k x / k) at k = " + std::to_string(k));
}

}  // namespace

SummationSides lemma_3_2_check(const FiniteSequence& a, std::span<const double> q) {
  if (q.empty()) throw UsageError("lemma_3_2_check: need at least one q");
  for (double v : q)
    if (!(v > 0.0 && v < 1.0)) throw DomainError("lemma_3_2_check: q_h must lie in (0, 1)");
  const auto m = static_cast<unsigned>(q.size());

  double lhs = 0.0, scale = 0.0;
  for (const auto& [k, ak] : a.support()) {
    double w = 1.0;
    for (double qh : q) w *= (1.0 - qh) / (1.0 - std::pow(qh, 1.0 / static_cast<double>(k)));
    const double term = to_double(ak) * w;
    lhs += term;
    scale += std::abs(term);
  }

  double rhs = to_double(tail_sum(a, 1));
  for (std::uint64_t k = 2; k <= a.bound(); ++k) {
    const Rational S = tail_sum(a, k);
    if (S == 0) continue;
    double sel = 0.0;
    for_each_selector(LatticeSelector(m, k), [&](std::span<const std::uint64_t> j) {
      double t = 1.0;
      for (unsigned h = 0; h < m; ++h) t *= std::pow(q[h], static_cast<double>(j[h]) / static_cast<double>(k));
      sel += t;
    });
    rhs += to_double(S) * sel;
  }
  return finish(lhs, rhs, scale);
}

SummationSides thm_5_1_check(const FiniteSequence& a, const FiniteSequence& b, double x, InnerSumReading reading) {
  const std::uint64_t n = a.bound();
  double lhs = 0.0, scale = 0.0, plain = 0.0;
  for (const auto& [k, ak] : a.support()) {
    const double t = to_double(b[k]) * x;
    require_nonvanishing(t, k);
    const double term = to_double(ak) * window_ratio(t, k);
    lhs += term;
    scale += std::abs(term);
    plain += to_double(ak);
  }

  double rhs = plain;
  for (std::uint64_t M = 2; M <= n; ++M) {
    for (std::uint64_t k = 1; k <= n / M; ++k) {
      const double amk = to_double(a[M * k]);
      if (amk == 0.0) continue;
      const double bmk = to_double(b[M * k]);
      const std::uint64_t upper = reading == InnerSumReading::Resolved ? M : k;
      const double denom = static_cast<double>(upper);
      for (std::uint64_t j = 1; j < upper; ++j)
        if (std::gcd(j, M) == 1) rhs += amk * std::exp(bmk * static_cast<double>(j) * x / denom);
    }
  }
  return finish(lhs, rhs, scale);
}

SummationSides thm_5_2_check(const FiniteSequence& a, const FiniteSequence& b, const FiniteSequence& c, double x) {
  const std::uint64_t n = a.bound();
  double lhs = 0.0, scale = 0.0, plain = 0.0;
  for (const auto& [k, ak] : a.support()) {
    const double tb = to_double(b[k]) * x;
    const double tc = to_double(c[k]) * x;
    require_nonvanishing(tb, k);
    require_nonvanishing(tc, k);
    const double term = to_double(ak) * window_ratio(tb, k) * window_ratio(tc, k);
    lhs += term;
    scale += std::abs(term);
    plain += to_double(ak);
  }

  double rhs = plain;
  for (std::uint64_t M = 2; M <= n; ++M) {
    const double Md = static_cast<double>(M);
    for (std::uint64_t k = 1; k <= n / M; ++k) {
      const double amk = to_double(a[M * k]);
      if (amk == 0.0) continue;
      const double bb = to_double(b[M * k]), cc = to_double(c[M * k]);
      for (std::uint64_t j1 = 0; j1 < M; ++j1)
        for (std::uint64_t j2 = 0; j2 < M; ++j2)
          if (std::gcd(std::gcd(j1, j2), M) == 1)
            rhs += amk * std::exp((bb * static_cast<double>(j1) + cc * static_cast<double>(j2)) * x / Md);
    }
  }
  return finish(lhs, rhs, scale);
}

SummationSides thm_5_8_check(const FiniteSequence& a, const FiniteSequence& b, double x) {
  const std::uint64_t n = a.bound();
  double lhs = 0.0, scale = 0.0, plain = 0.0;
  for (const auto& [k, ak] : a.support()) {
    const double t = to_double(b[k]) * x;
    require_nonvanishing(t, k);
    const double term = static_cast<double>(k) * to_double(ak) * window_ratio(t, k);
    lhs += term;
    scale += std::abs(term);
    plain += to_double(ak);
  }

  double rhs = plain;
  for (std::uint64_t M = 2; M <= n; ++M) {
    const double Md = static_cast<double>(M);
    for (std::uint64_t k = 1; k <= n / M; ++k) {
      const double amk = to_double(a[M * k]);
      if (amk == 0.0) continue;
      const double bb = to_double(b[M * k]);
      for (std::uint64_t j1 = 0; j1 < M; ++j1)
        for (std::uint64_t j2 = 0; j2 < M; ++j2)
          if (std::gcd(std::gcd(j1, j2), M) == 1) rhs += amk * std::exp(bb * static_cast<double>(j1) * x / Md);
    }
  }
  return finish(lhs, rhs, scale);
}

SummationSides thm_5_10_check(const FiniteSequence& a, std::span<const FiniteSequence> bs, double x) {
  if (bs.empty()) throw UsageError("thm_5_10_check: need h >= 1 sequences b");
  const auto h = static_cast<unsigned>(bs.size());
  const std::uint64_t n = a.bound();
  double lhs = 0.0, scale = 0.0, plain = 0.0;
  for (const auto& [k, ak] : a.support()) {
    double term = to_double(ak);
    for (const auto& b : bs) {
      const double t = to_double(b[k]) * x;
      require_nonvanishing(t, k);
      term *= window_ratio(t, k);
    }
    lhs += term;
    scale += std::abs(term);
    plain += to_double(ak);
  }

  double rhs = plain;
  std::vector<double> bv(h);
  for (std::uint64_t M = 2; M <= n; ++M) {
    const double Md = static_cast<double>(M);
    for (std::uint64_t k = 1; k <= n / M; ++k) {
      const double amk = to_double(a[M * k]);
      if (amk == 0.0) continue;
      for (unsigned l = 0; l < h; ++l) bv[l] = to_double(bs[l][M * k]);
      for_each_selector(LatticeSelector(h, M), [&](std::span<const std::uint64_t> j) {
        double e = 0.0;
        for (unsigned l = 0; l < h; ++l) e += bv[l] * static_cast<double>(j[l]);
        rhs += amk * std::exp(e * x / Md);
      });
    }
  }
  return finish(lhs, rhs, scale);
}

// ---------------------------------------------------------------- exact Jordan sums

namespace {

Rational q_of(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

}  // namespace

ExactSides jordan_summation_sides(const FiniteSequence& a, unsigned m) {
  ExactSides out{0, 0};
  for (const auto& [k, ak] : a.support()) out.lhs += ak * rpow(q_of(k), m);
  for (std::uint64_t j = 1; j <= a.bound(); ++j) {
    const Rational S = tail_sum(a, j);
    if (S != 0) out.rhs += Rational(jordan(m, j)) * S;
  }
  return out;
}

ExactSides square_sum_sides(std::uint64_t n) {
  if (n == 0) throw UsageError("square_sum_sides: n must be >= 1");
  ExactSides out{0, q_of(n)};
  out.lhs = q_of(n) * q_of(n + 1) * q_of(2 * n + 1) / 6;
  for (std::uint64_t j = 2; j <= n; ++j) out.rhs += q_of(n / j) * Rational(jordan(2, j));
  return out;
}

ExactSides jordan_power_sides(unsigned m, long a, std::uint64_t n) {
  if (m == 0 || n == 0) throw UsageError("jordan_power_sides: m and n must be >= 1");
  ExactSides out{0, 0};
  for (std::uint64_t k = 1; k <= n; ++k) out.lhs += rpow(q_of(k), a);
  const long shift = a - static_cast<long>(m);
  // prefix[t] = sum_{k<=t} k^shift
  std::vector<Rational> prefix(n + 1, Rational(0));
  for (std::uint64_t k = 1; k <= n; ++k) prefix[k] = prefix[k - 1] + rpow(q_of(k), shift);
  for (std::uint64_t j = 1; j <= n; ++j) out.rhs += Rational(jordan(m, j)) * rpow(q_of(j), shift) * prefix[n / j];
  return out;
}

ExactSides jordan_floor_sides(unsigned m, std::uint64_t n) {
  if (m == 0 || n == 0) throw UsageError("jordan_floor_sides: m and n must be >= 1");
  ExactSides out{0, 0};
  for (std::uint64_t k = 1; k <= n; ++k) out.lhs += rpow(q_of(k), m);
  for (std::uint64_t j = 1; j <= n; ++j) out.rhs += q_of(n / j) * Rational(jordan(m, j));
  return out;
}

ExactSides jordan_geometric_sides(unsigned m, std::uint64_t n, const Rational& z, bool printed) {
  if (m == 0 || n == 0) throw UsageError("jordan_geometric_sides: m and n must be >= 1");
  ExactSides out{0, 0};
  for (std::uint64_t k = 1; k <= n; ++k) out.lhs += rpow(z, static_cast<long>(k)) * rpow(q_of(k), m);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const Rational zj = rpow(z, static_cast<long>(j));
    if (zj == 1) throw DomainError("jordan_geometric_sides: z^j = 1 makes a denominator vanish");
    const Rational ratio = (1 - rpow(z, static_cast<long>(j * (n / j)))) / (1 - zj);
    out.rhs += Rational(jordan(m, j)) * (printed ? Rational(1) : zj) * ratio;
  }
  return out;
}

// ---------------------------------------------------------------- products

ProductComparison cor_5_3_check(double x, double y, double z, std::uint64_t c_max) {
  if (c_max < 2) throw UsageError("cor_5_3_check: c_max must be >= 2");
  if (!(std::abs(x) < 1 && std::abs(z) < 1 && std::abs(x * z) < 1 && std::abs(y * z) < 1 &&
        std::abs(x * y * z) < 1) ||
      y == 1.0)
    throw DomainError("cor_5_3_check: need |x|, |z|, |xz|, |yz|, |xyz| < 1 and y != 1");
  const double base = (1 - x * z) * (1 - y * z) / ((1 - z) * (1 - x * y * z));
  if (!(base > 0.0)) throw DomainError("cor_5_3_check: closed form base is not positive");
  const double rhs = std::pow(base, 1.0 / ((1 - x) * (1 - y)));

  std::vector<double> xp(c_max), yp(c_max);
  for (std::uint64_t i = 0; i < c_max; ++i) {
    xp[i] = std::pow(x, static_cast<double>(i));
    yp[i] = std::pow(y, static_cast<double>(i));
  }
  double log_lhs = 0.0, log_half = 0.0;
  for (std::uint64_t c = 1; c <= c_max; ++c) {
    const double zc = std::pow(z, static_cast<double>(c));
    double layer = 0.0;
    for (std::uint64_t a = 0; a < c; ++a)
      for (std::uint64_t b = 0; b < c; ++b)
        if (std::gcd(std::gcd(a, b), c) == 1) layer -= std::log1p(-xp[a] * yp[b] * zc);
    log_lhs += layer / static_cast<double>(c);
    if (c == c_max / 2) log_half = log_lhs;
  }
  ProductComparison out;
  out.lhs = std::exp(log_lhs);
  out.rhs = rhs;
  out.residual = std::abs(out.lhs - rhs);
  out.half_residual = std::abs(std::exp(log_half) - rhs);
  return out;
}

HyperpyramidResult hyperpyramid_check(std::span<const double> x, std::span<const Rational> b, std::uint64_t K,
                                      unsigned lower) {
  const auto n = static_cast<unsigned>(x.size());
  if (n == 0 || b.size() != n) throw UsageError("hyperpyramid_check: x and b need the same positive length");
  if (K < 1) throw UsageError("hyperpyramid_check: K must be >= 1");
  for (double v : x)
    if (!(v > 0.0 && v < 1.0)) throw DomainError("hyperpyramid_check: x_i must lie in (0, 1)");
  Rational total = 0;
  for (const auto& v : b) total += v;
  if (total != 1) throw DomainError("hyperpyramid_check: the b_i must sum to 1");
  if (lower == 0)
    for (unsigned i = 0; i + 1 < n; ++i)
      if (b[i] != 0) throw DomainError("hyperpyramid_check: a_i = 0 needs b_i = 0 (0^b in the exponent)");

  std::vector<double> bd(n);
  for (unsigned i = 0; i < n; ++i) bd[i] = b[i].get_d();

  // 1 / prod a_i^{b_i}, with 0^0 = 1
  auto weight = [&](std::span<const std::uint64_t> a) {
    double w = 1.0;
    for (unsigned i = 0; i < n; ++i) w /= std::pow(static_cast<double>(a[i]), bd[i]);
    return w;
  };
  auto monomial = [&](std::span<const std::uint64_t> a, std::uint64_t r) {
    double t = 1.0;
    for (unsigned i = 0; i < n; ++i) t *= std::pow(x[i], static_cast<double>(r * a[i]));
    return t;
  };

  HyperpyramidResult out;
  for (const auto& a : visible_points(RadialRegion::pyramid(n, K, lower))) {
    const double w = weight(a);
    for (std::uint64_t r = 1; r * a[n - 1] <= K; ++r) out.matched_lhs += w * monomial(a, r) / static_cast<double>(r);
    out.naive_lhs -= w * std::log1p(-monomial(a, 1));
  }

  // k-th term of the right exponent; partial[i] = sum_{j<k} x_i^j / j^{b_i}
  std::vector<double> partial(n, 0.0);
  auto rhs_term = [&](std::uint64_t k) {
    const double kd = static_cast<double>(k);
    double t = std::pow(x[n - 1], kd) / std::pow(kd, bd[n - 1]);
    for (unsigned i = 0; i + 1 < n; ++i) t *= partial[i];
    for (unsigned i = 0; i + 1 < n; ++i) partial[i] += std::pow(x[i], kd) / std::pow(kd, bd[i]);
    return t;
  };
  for (std::uint64_t k = 1; k <= K; ++k) out.matched_rhs += rhs_term(k);
  out.converged_rhs = out.matched_rhs;
  for (std::uint64_t k = K + 1; k <= 1'000'000; ++k) {
    const double t = rhs_term(k);
    out.converged_rhs += t;
    if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(out.converged_rhs))) break;
  }
  out.matched_residual = std::abs(out.matched_lhs - out.matched_rhs);
  out.naive_residual = std::abs(out.naive_lhs - out.converged_rhs);
  return out;
}

}  // namespace vpv
