#pragma once

// Truncated univariate power series with exact rational coefficients.

#include "vpv/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vpv {

inline constexpr std::size_t kDefaultSeriesOrder = 64;

/// c_0 + c_1 z + ... + c_N z^N  (mod z^{N+1}).
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order = kDefaultSeriesOrder);
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, std::size_t order);
  /// c * z^power (zero if power > order).
  static PowerSeries monomial(const Rational& c, std::size_t power, std::size_t order);
  /// 1 / (1 - z)^j truncated at order.
  static PowerSeries inverse_one_minus_z_pow(unsigned j, std::size_t order);
  /// log(1 - z^k) = -sum_{r>=1} z^{k r} / r.
  static PowerSeries log_one_minus_zk(std::uint64_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// Coefficientwise equality through min(order).
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// First index (<= min order) where a and b differ, or -1.
  friend long first_difference(const PowerSeries& a, const PowerSeries& b);

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(a.order, b.order).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// exp(a) for a with zero constant term; DomainError otherwise.
PowerSeries ps_exp(const PowerSeries& a);
/// log(a) for a with constant term 1; DomainError otherwise.
PowerSeries ps_log(const PowerSeries& a);
/// exp(r log a) for a with constant term 1.
PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& r);

/// prod_{k=1}^{N} (1 - z^k)^{exps[k]} truncated at order N. Missing keys are exponent 0;
/// keys outside [1, N] throw UsageError because they cannot affect the retained coefficients.
PowerSeries product_with_exponents(const std::map<std::uint64_t, Rational>& exps, std::size_t order);

/// sum_{j=0}^{m-1} S(m-1, j) j! z^j / (1 - z)^{j+1}, i.e. sum_{k>=0} k^{m-1} z^k with 0^0 = 1.
PowerSeries stirling_rhs_series(unsigned m, std::size_t order);

/// sum_{k>=1} k^p z^k.
PowerSeries power_weighted_geometric(unsigned p, std::size_t order);

/// Checks sum_{k=0}^{n-1} k^{m-1} z^k == sum_j S(m-1, j) z^j D^j (1 + z + ... + z^{n-1})
/// exactly at the rational point z. z == 1 throws DomainError.
bool finite_stirling_check(unsigned m, std::uint64_t n, const Rational& z);

struct FiniteStirlingSides {
  Rational lhs;
  Rational rhs;
};
FiniteStirlingSides finite_stirling_sides(unsigned m, std::uint64_t n, const Rational& z);

}  // namespace vpv
