#include "vpv/dirichlet.hpp"

#include "vpv/errors.hpp"

#include <algorithm>

namespace vpv {

DirichletSeries::DirichletSeries(std::uint64_t length) : coeffs_(length, Rational(0)) {
  if (length == 0) throw UsageError("Dirichlet series needs at least one coefficient");
}

DirichletSeries DirichletSeries::from(std::uint64_t length,
                                      const std::function<Rational(std::uint64_t)>& coeff) {
  DirichletSeries out(length);
  for (std::uint64_t n = 1; n <= length; ++n) out[n] = coeff(n);
  return out;
}

DirichletSeries DirichletSeries::zeta_shifted(std::uint64_t length, long shift) {
  return from(length, [shift](std::uint64_t n) {
    return rpow(Rational(Integer(static_cast<unsigned long>(n))), -shift);
  });
}

DirichletSeries DirichletSeries::inverse_zeta_shifted(std::uint64_t length, long shift) {
  return from(length, [shift](std::uint64_t n) {
    const int mu = moebius(n);
    if (mu == 0) return Rational(0);
    return Rational(Rational(mu) * rpow(Rational(Integer(static_cast<unsigned long>(n))), -shift));
  });
}

DirichletSeries& DirichletSeries::operator+=(const DirichletSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DirichletSeries& DirichletSeries::operator-=(const DirichletSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DirichletSeries& DirichletSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DirichletSeries operator*(const DirichletSeries& a, const DirichletSeries& b) {
  const std::uint64_t n = std::min(a.length(), b.length());
  DirichletSeries out(n);
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (a[d] == 0) continue;
    for (std::uint64_t e = 1; d * e <= n; ++e)
      if (b[e] != 0) out[d * e] += a[d] * b[e];
  }
  return out;
}

std::uint64_t first_difference(const DirichletSeries& a, const DirichletSeries& b) {
  const std::uint64_t n = std::min(a.length(), b.length());
  for (std::uint64_t i = 1; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return 0;
}

}  // namespace vpv
