#include "vpv/series.hpp"

#include "vpv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace vpv {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
  PowerSeries out(order);
  if (power <= order) out.coeffs_[power] = c;
  return out;
}

PowerSeries PowerSeries::inverse_one_minus_z_pow(unsigned j, std::size_t order) {
  // [z^n] (1 - z)^{-j} = C(n + j - 1, j - 1)
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n)
    out.coeffs_[n] = j == 0 ? Rational(n == 0 ? 1 : 0)
                            : Rational(binomial(static_cast<unsigned>(n) + j - 1, j - 1));
  return out;
}

PowerSeries PowerSeries::log_one_minus_zk(std::uint64_t k, std::size_t order) {
  if (k == 0) throw DomainError("log(1 - z^k) needs k >= 1");
  PowerSeries out(order);
  for (std::uint64_t r = 1; k * r <= order; ++r) out.coeffs_[k * r] = make_rational(-1, static_cast<long>(r));
  return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw UsageError("cannot raise the truncation order of a series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

bool operator==(const PowerSeries& a, const PowerSeries& b) { return first_difference(a, b) < 0; }

long first_difference(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return static_cast<long>(i);
  return -1;
}

std::string PowerSeries::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    out << vpv::to_string(coeffs_[i]);
  }
  return out.str();
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries ps_exp(const PowerSeries& a) {
  if (a[0] != 0) throw DomainError("ps_exp: constant term must be 0");
  // b = exp(a) satisfies b' = a' b, i.e. n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
  const std::size_t n = a.order();
  PowerSeries b(n);
  b[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= i; ++k)
      if (a[k] != 0) acc += Rational(static_cast<unsigned long>(k)) * a[k] * b[i - k];
    b[i] = acc / Rational(static_cast<unsigned long>(i));
  }
  return b;
}

PowerSeries ps_log(const PowerSeries& a) {
  if (a[0] != 1) throw DomainError("ps_log: constant term must be 1");
  // l = log(a): a l' = a', so n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
  const std::size_t n = a.order();
  PowerSeries l(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc = Rational(static_cast<unsigned long>(i)) * a[i];
    for (std::size_t k = 1; k < i; ++k)
      if (l[k] != 0) acc -= Rational(static_cast<unsigned long>(k)) * l[k] * a[i - k];
    l[i] = acc / Rational(static_cast<unsigned long>(i));
  }
  return l;
}

PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& r) {
  if (a[0] != 1) throw DomainError("ps_pow_rational: constant term must be 1");
  return ps_exp(r * ps_log(a));
}

PowerSeries product_with_exponents(const std::map<std::uint64_t, Rational>& exps, std::size_t order) {
  PowerSeries log_sum(order);
  for (const auto& [k, e] : exps) {
    if (k < 1 || k > order)
      throw UsageError("product_with_exponents: exponent index " + std::to_string(k) +
                       " outside [1, " + std::to_string(order) + "]");
    if (e != 0) log_sum += e * PowerSeries::log_one_minus_zk(k, order);
  }
  return ps_exp(log_sum);
}

PowerSeries stirling_rhs_series(unsigned m, std::size_t order) {
  if (m == 0) throw UsageError("stirling_rhs_series: m must be >= 1");
  PowerSeries out(order);
  for (unsigned j = 0; j < m; ++j) {
    const Rational c(stirling2(m - 1, j) * factorial(j));
    if (c == 0) continue;
    // z^j / (1 - z)^{j+1}
    const PowerSeries tail = PowerSeries::inverse_one_minus_z_pow(j + 1, order);
    for (std::size_t n = j; n <= order; ++n) out[n] += c * tail[n - j];
  }
  return out;
}

PowerSeries power_weighted_geometric(unsigned p, std::size_t order) {
  PowerSeries out(order);
  for (std::size_t k = 1; k <= order; ++k) out[k] = Rational(ipow(Integer(static_cast<unsigned long>(k)), p));
  return out;
}

FiniteStirlingSides finite_stirling_sides(unsigned m, std::uint64_t n, const Rational& z) {
  if (m == 0) throw UsageError("finite_stirling_check: m must be >= 1");
  if (n == 0) throw UsageError("finite_stirling_check: n must be >= 1");
  if (z == 1) throw DomainError("finite_stirling_check: z = 1 is excluded");

  Rational lhs = 0;
  for (std::uint64_t k = 0; k < n; ++k)
    lhs += Rational(ipow(Integer(static_cast<unsigned long>(k)), m - 1)) * rpow(z, static_cast<long>(k));

  // D^j z^k = k (k-1) ... (k-j+1) z^{k-j} on the polynomial 1 + z + ... + z^{n-1}.
  Rational rhs = 0;
  for (unsigned j = 0; j < m; ++j) {
    const Rational s(stirling2(m - 1, j));
    if (s == 0) continue;
    Rational derivative = 0;
    for (std::uint64_t k = j; k < n; ++k) {
      Integer falling = 1;
      for (unsigned i = 0; i < j; ++i) falling *= static_cast<unsigned long>(k - i);
      derivative += Rational(falling) * rpow(z, static_cast<long>(k - j));
    }
    rhs += s * rpow(z, j) * derivative;
  }
  return {lhs, rhs};
}

bool finite_stirling_check(unsigned m, std::uint64_t n, const Rational& z) {
  const auto sides = finite_stirling_sides(m, n, z);
  return sides.lhs == sides.rhs;
}

}  // namespace vpv
