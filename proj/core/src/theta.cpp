#include "vpv/analytic.hpp"

#include "vpv/errors.hpp"
#include "vpv/exact.hpp"
#include "vpv/totients.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace vpv {

namespace {

using cplx = std::complex<double>;

void require_unit_disc(double q, const char* who) {
  if (!(std::abs(q) < 1.0)) throw DomainError(std::string(who) + ": |q| must be < 1");
}

// sum_{k>=first} (-1)^k q^{k(k+1)} sin((2k+1) z)
double theta_sum(double z, double q, const TruncationControl& trunc, std::uint64_t first) {
  double sum = 0.0;
  for (std::uint64_t k = first; k <= trunc.max_index; ++k) {
    const double w = std::pow(q, static_cast<double>(k * (k + 1)));
    if (k > first && std::abs(w) < trunc.tolerance) break;
    sum += (k % 2 ? -w : w) * std::sin(static_cast<double>(2 * k + 1) * z);
  }
  return sum;
}

// theta_1(z, Q) / (2 Q^{1/4} sin z) written without the division:
// sin((2j+1) z) / sin z = 1 + 2 sum_{i=1}^{j} cos(2 i z).
double theta_over_sine(double z, double Q) {
  double sum = 0.0;
  double u = 1.0;
  for (std::uint64_t j = 0;; ++j) {
    if (j > 0) u += 2.0 * std::cos(2.0 * static_cast<double>(j) * z);
    const double w = std::pow(Q, static_cast<double>(j * (j + 1)));
    if (j > 0 && std::abs(w) < 1e-18) break;
    sum += (j % 2 ? -w : w) * u;
  }
  return sum;
}

}  // namespace

double theta1_reduced(double z, double q, const TruncationControl& trunc) {
  require_unit_disc(q, "theta1");
  return theta_sum(z, q, trunc, 0);
}

double theta1(double z, double q, const TruncationControl& trunc) {
  require_unit_disc(q, "theta1");
  if (q < 0.0) throw DomainError("theta1: q^{1/4} needs q >= 0");
  return 2.0 * std::pow(q, 0.25) * theta_sum(z, q, trunc, 0);
}

double theta1_shifted_display(double z, double q, const TruncationControl& trunc) {
  require_unit_disc(q, "theta1");
  if (q < 0.0) throw DomainError("theta1: q^{1/2} needs q >= 0");
  return 2.0 * std::sqrt(q) * theta_sum(z, q, trunc, 1);
}

double theta1_product(double z, double q, const TruncationControl& trunc) {
  require_unit_disc(q, "theta1");
  if (q < 0.0) throw DomainError("theta1: q^{1/4} needs q >= 0");
  double prod = 2.0 * std::pow(q, 0.25) * std::sin(z);
  const double c = std::cos(2.0 * z);
  for (std::uint64_t n = 1; n <= trunc.max_index; ++n) {
    const double q2n = std::pow(q, 2.0 * static_cast<double>(n));
    if (q2n < trunc.tolerance * 1e-3) break;
    prod *= (1.0 - q2n) * (1.0 - 2.0 * q2n * c + q2n * q2n);
  }
  return prod;
}

LogRatioSides theta_log_ratio_check(double alpha, double beta, double q, const TruncationControl& trunc) {
  require_unit_disc(q, "theta_log_ratio_check");
  const double sp = std::sin(alpha + beta);
  const double sm = std::sin(alpha - beta);
  if (std::abs(sp) < 1e-12 || std::abs(sm) < 1e-12)
    throw DomainError("theta_log_ratio_check: sin(alpha +- beta) vanishes");

  double lhs = 0.0;
  for (std::uint64_t k = 1; k <= trunc.max_index; ++k) {
    const double q2k = std::pow(q, 2.0 * static_cast<double>(k));
    lhs += q2k / (1.0 - q2k) / static_cast<double>(k) * std::sin(2.0 * k * alpha) * std::sin(2.0 * k * beta);
  }

  const double tp = theta1_reduced(alpha + beta, q, trunc);
  const double tm = theta1_reduced(alpha - beta, q, trunc);
  const double rhs = 0.25 * std::log(tp * sm / (tm * sp));

  if (q > 0.0) {
    const double full = 0.25 * std::log(theta1(alpha + beta, q, trunc) * sm / (theta1(alpha - beta, q, trunc) * sp));
    if (std::abs(full - rhs) > 1e-12 * (1.0 + std::abs(rhs)))
      throw ConsistencyError("theta_log_ratio_check: q^{1/4} prefactors failed to cancel");
  }
  return {lhs, rhs};
}

const char* to_string(ThetaIdentity id) {
  switch (id) {
    case ThetaIdentity::Thm6_1: return "Thm6.1";
    case ThetaIdentity::Cor6_2: return "Cor6.2";
    case ThetaIdentity::Cor6_3: return "Cor6.3";
    case ThetaIdentity::Thm6_4: return "Thm6.4";
    case ThetaIdentity::Cor6_5: return "Cor6.5";
    case ThetaIdentity::Cor6_6: return "Cor6.6";
  }
  return "?";
}

namespace {

struct Weights {
  // Left weight: sum_{i<n} x^{i/n} (or its limit) for each n.
  std::function<cplx(std::uint64_t)> left;
  // Product exponent numerator e_k for k >= 2.
  std::function<cplx(std::uint64_t)> exponent;
  // e_1 as it appears in the k = 1 factor of the printed product.
  double first_exponent = 0.0;
};

cplx integer_power(std::uint64_t n, unsigned m) { return std::pow(static_cast<double>(n), static_cast<double>(m)); }

Weights weights_for(const ThetaVpvParams& p) {
  using Id = ThetaIdentity;
  Weights w;
  switch (p.id) {
    case Id::Thm6_1:
    case Id::Thm6_4: {
      const bool real = !p.x.empty();
      if (real == !p.rotations.empty())
        throw UsageError("theta_vpv_check: give either x or rotation numbers, not both");
      const std::size_t dims = real ? p.x.size() : p.rotations.size();
      if (p.id == Id::Thm6_1 && dims != 1) throw UsageError("theta_vpv_check: Thm6.1 takes a single x");
      if (real) {
        for (double x : p.x)
          if (!(x > 0.0 && x < 1.0)) throw UsageError("theta_vpv_check: real x must lie in (0, 1)");
        const std::vector<double> xs = p.x;
        w.left = [xs](std::uint64_t n) {
          double prod = 1.0;
          for (double x : xs) prod *= (1.0 - x) / (1.0 - std::pow(x, 1.0 / static_cast<double>(n)));
          return cplx(prod);
        };
        w.exponent = [xs](std::uint64_t k) {
          double total = 0.0;
          for_each_selector(LatticeSelector(static_cast<unsigned>(xs.size()), k),
                            [&](std::span<const std::uint64_t> j) {
                              double term = 1.0;
                              for (std::size_t h = 0; h < j.size(); ++h)
                                term *= std::pow(xs[h], static_cast<double>(j[h]) / static_cast<double>(k));
                              total += term;
                            });
          return cplx(total);
        };
      } else {
        const std::vector<double> th = p.rotations;
        w.left = [th](std::uint64_t n) {
          cplx prod = 1.0;
          for (double t : th) {
            cplx s = 0.0;
            for (std::uint64_t i = 0; i < n; ++i) {
              const double turns = std::fmod(t * static_cast<double>(i) / static_cast<double>(n), 1.0);
              s += std::polar(1.0, 2.0 * std::numbers::pi * turns);
            }
            prod *= s;
          }
          return prod;
        };
        w.exponent = [th](std::uint64_t k) { return selector_character_sum(k, th); };
      }
      break;
    }
    case Id::Cor6_2:
    case Id::Cor6_6: {
      if (p.n.empty()) throw UsageError("theta_vpv_check: integer exponents n are required");
      if (p.id == Id::Cor6_2 && p.n.size() != 1) throw UsageError("theta_vpv_check: Cor6.2 takes a single n");
      std::uint64_t g = 0;
      for (auto v : p.n) g = std::gcd(g, static_cast<std::uint64_t>(v < 0 ? -v : v));
      const auto m = static_cast<unsigned>(p.n.size());
      const unsigned left_power = p.id == Id::Cor6_6 && p.printed_left_weights ? 1 : m;
      w.left = [g, left_power](std::uint64_t n) {
        return g % n == 0 ? integer_power(n, left_power) : cplx(0.0);
      };
      const std::vector<std::int64_t> ns = p.n;
      w.exponent = [ns](std::uint64_t k) { return cplx(ramanujan_cohen(k, ns).get_d()); };
      w.first_exponent = 1.0;
      break;
    }
    case Id::Cor6_3:
    case Id::Cor6_5: {
      const unsigned m = p.id == Id::Cor6_3 ? 1 : p.m;
      if (m == 0) throw UsageError("theta_vpv_check: m must be >= 1");
      w.left = [m](std::uint64_t n) { return integer_power(n, m); };
      w.exponent = [m](std::uint64_t k) { return cplx(jordan(m, k).get_d()); };
      w.first_exponent = 1.0;
      break;
    }
  }
  return w;
}

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>, boost::multiprecision::et_off>;

// Terms below this are dropped; rounding in Big is near 1e-200.
const Big kBigCut("1e-195");

Big big_pow(Big base, std::uint64_t e) {
  Big r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Big big_theta_over_sine(const Big& z, const Big& Q) {
  Big sum = 0, u = 1;
  for (std::uint64_t j = 0;; ++j) {
    if (j > 0) u += 2 * cos(2 * Big(j) * z);
    const Big w = big_pow(Q, j * (j + 1));
    if (j > 0 && abs(w) < kBigCut) break;
    sum += (j % 2 ? -w : w) * u;
  }
  return sum;
}

// Same four quantities as the double path, for weights that are integers.
void extended_sides(const ThetaVpvParams& p, const Weights& w, const std::vector<cplx>& e, unsigned dims,
                    ThetaVpvResult& out) {
  const Big q = p.q, A = Big(p.alpha) + Big(p.beta), B = Big(p.alpha) - Big(p.beta);
  const Big left_beta = p.reading == SineReading::RepeatedAlpha ? Big(p.alpha) : Big(p.beta);
  auto G = [&](std::uint64_t n, const Big& b) -> Big {
    const Big q2n = big_pow(q, 2 * n);
    return 4 * q2n / (1 - q2n) * sin(2 * Big(n) * Big(p.alpha)) * sin(2 * Big(n) * b) / Big(n);
  };
  auto big = [](const cplx& v) { return Big(v.real()); };
  const std::uint64_t K = p.cutoff;

  Big lhs = 0, rhs = 0;
  for (std::uint64_t n = 1; n <= K; ++n) lhs += big(w.left(n)) * G(n, left_beta);
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (e[k] == 0.0) continue;
    Big s = 0;
    for (std::uint64_t d = 1; k * d <= K; ++d) s += G(k * d, Big(p.beta));
    rhs += big(e[k]) * s;
  }

  Big ref = 0;
  const Big q2 = q * q;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    ref += big(w.left(n)) * G(n, left_beta);
    const Big bound = 4 * big_pow(abs(q2), n) * big_pow(Big(n), dims) / (1 - abs(q2));
    if (n >= K && bound < kBigCut) break;
  }
  Big closed = 0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (e[k] == 0.0) continue;
    const Big Q = big_pow(q, k);
    closed += big(e[k]) / Big(k) * (log(big_theta_over_sine(Big(k) * A, Q)) - log(big_theta_over_sine(Big(k) * B, Q)));
  }

  out.lhs = static_cast<double>(lhs);
  out.rhs = static_cast<double>(rhs);
  out.residual = static_cast<double>(abs(lhs - rhs));
  out.lhs_reference = static_cast<double>(ref);
  out.rhs_closed = static_cast<double>(closed);
  out.tail_residual = static_cast<double>(abs(ref - closed));
}

}  // namespace

ThetaVpvResult theta_vpv_check(const ThetaVpvParams& p) {
  ThetaVpvResult out;
  if (p.cutoff < 1) throw UsageError("theta_vpv_check: cutoff must be >= 1");
  if (!(p.tolerance > 0.0)) throw UsageError("theta_vpv_check: tolerance must be positive");
  if (p.extended_precision &&
      (p.id == ThetaIdentity::Thm6_1 || p.id == ThetaIdentity::Thm6_4 || p.reading == SineReading::UndilatedRatio))
    throw UsageError("theta_vpv_check: extended precision needs integer weights and dilated sines");
  const Weights w = weights_for(p);

  if (!(std::abs(p.q) < 1.0)) {
    out.skipped = true;
    out.reason = "|q| >= 1: the theta expansions do not converge";
    return out;
  }
  const double A = p.alpha + p.beta;
  const double B = p.alpha - p.beta;
  if (std::abs(std::sin(A)) < 1e-12 || std::abs(std::sin(B)) < 1e-12) {
    out.skipped = true;
    out.reason = "sin(alpha +- beta) vanishes";
    return out;
  }

  const double q = p.q;
  // G(n) = 4 q^{2n} / (1 - q^{2n}) sin 2n a sin 2n b / n
  auto G = [q](std::uint64_t n, double a, double b) {
    const double q2n = std::pow(q, 2.0 * static_cast<double>(n));
    const double nd = static_cast<double>(n);
    return 4.0 * q2n / (1.0 - q2n) * std::sin(2.0 * nd * a) * std::sin(2.0 * nd * b) / nd;
  };
  const double left_beta = p.reading == SineReading::RepeatedAlpha ? p.alpha : p.beta;
  auto G_left = [&](std::uint64_t n) { return G(n, p.alpha, left_beta); };
  auto G_right = [&](std::uint64_t n) { return G(n, p.alpha, p.beta); };

  const std::uint64_t K = p.cutoff;
  std::vector<cplx> e(K + 1, 0.0);
  try {
    for (std::uint64_t k = 2; k <= K; ++k) e[k] = w.exponent(k);
  } catch (const ResourceError& err) {
    out.skipped = true;
    out.reason = err.what();
    return out;
  }
  e[1] = 1.0 + (p.printed_product_from_one ? w.first_exponent : 0.0);

  // log of the printed k-th factor minus its dilated-sine reading
  auto undilated_shift = [&](std::uint64_t k) {
    const double kd = static_cast<double>(k);
    return std::log(cplx(std::sin(kd * A) * std::sin(B) / (std::sin(kd * B) * std::sin(A))));
  };

  for (std::uint64_t n = 1; n <= K; ++n) out.lhs += w.left(n) * G_left(n);
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (e[k] == 0.0) continue;
    double s = 0.0;
    for (std::uint64_t d = 1; k * d <= K; ++d) s += G_right(k * d);
    out.rhs += e[k] * s;
    if (p.reading == SineReading::UndilatedRatio && k > 1) out.rhs += e[k] / static_cast<double>(k) * undilated_shift(k);
  }
  out.residual = std::abs(out.lhs - out.rhs);

  // Left side to convergence: |left(n)| <= n^m with m the number of variables.
  const double dims = p.id == ThetaIdentity::Cor6_5 ? p.m
                      : !p.n.empty()                ? static_cast<double>(p.n.size())
                      : !p.x.empty()                ? static_cast<double>(p.x.size())
                      : !p.rotations.empty()        ? static_cast<double>(p.rotations.size())
                                                    : 1.0;
  const double q2 = q * q;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    out.lhs_reference += w.left(n) * G_left(n);
    const double bound = 4.0 * std::pow(q2, static_cast<double>(n)) * std::pow(static_cast<double>(n), dims) / (1.0 - q2);
    if (n >= K && bound < 1e-20) break;
  }

  for (std::uint64_t k = 1; k <= K; ++k) {
    if (e[k] == 0.0) continue;
    const double kd = static_cast<double>(k);
    const double Q = std::pow(q, kd);
    cplx Lk = std::log(theta_over_sine(kd * A, Q)) - std::log(theta_over_sine(kd * B, Q));
    if (p.reading == SineReading::UndilatedRatio) Lk += undilated_shift(k);
    out.rhs_closed += e[k] / kd * Lk;
  }
  out.tail_residual = std::abs(out.lhs_reference - out.rhs_closed);

  if (p.extended_precision) extended_sides(p, w, e, static_cast<unsigned>(dims), out);

  out.pass = std::isfinite(out.residual) && std::isfinite(out.tail_residual) &&
             out.residual <= p.tolerance && out.tail_residual <= p.tolerance;
  return out;
}

}  // namespace vpv
