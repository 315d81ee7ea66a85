#pragma once

// Formal Dirichlet series sum_{n=1}^{N} a_n n^{-s} with exact coefficients.
// Used to compare zeta-quotient identities coefficient by coefficient.

#include "vpv/exact.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace vpv {

class DirichletSeries {
 public:
  /// Zero series with coefficients a_1 .. a_N.
  explicit DirichletSeries(std::uint64_t length);
  static DirichletSeries from(std::uint64_t length, const std::function<Rational(std::uint64_t)>& coeff);

  /// zeta(s + shift) = sum n^{-shift} n^{-s}.
  static DirichletSeries zeta_shifted(std::uint64_t length, long shift);
  /// 1 / zeta(s + shift) = sum mu(n) n^{-shift} n^{-s}.
  static DirichletSeries inverse_zeta_shifted(std::uint64_t length, long shift);

  std::uint64_t length() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::uint64_t n) const { return coeffs_.at(n - 1); }
  Rational& operator[](std::uint64_t n) { return coeffs_.at(n - 1); }

  DirichletSeries& operator+=(const DirichletSeries& other);
  DirichletSeries& operator-=(const DirichletSeries& other);
  DirichletSeries& operator*=(const Rational& scalar);

  friend DirichletSeries operator+(DirichletSeries a, const DirichletSeries& b) { return a += b; }
  friend DirichletSeries operator-(DirichletSeries a, const DirichletSeries& b) { return a -= b; }
  friend DirichletSeries operator*(const Rational& s, DirichletSeries a) { return a *= s; }
  /// Dirichlet convolution.
  friend DirichletSeries operator*(const DirichletSeries& a, const DirichletSeries& b);

  /// First n where the coefficients differ, or 0 if none do.
  friend std::uint64_t first_difference(const DirichletSeries& a, const DirichletSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace vpv
