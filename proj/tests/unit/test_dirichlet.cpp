#include <doctest.h>

#include "oracles.hpp"
#include "vpv/dirichlet.hpp"
#include "vpv/totients.hpp"

using namespace vpv;

TEST_CASE("zeta times its inverse is the unit series") {
  const auto u = DirichletSeries::zeta_shifted(300, 2) * DirichletSeries::inverse_zeta_shifted(300, 2);
  CHECK(u[1] == 1);
  for (std::uint64_t n = 2; n <= 300; ++n) CHECK(u[n] == 0);
}

TEST_CASE("convolution against a direct divisor sum") {
  const auto a = DirichletSeries::from(120, [](std::uint64_t n) { return Rational(static_cast<long>(n % 7) - 3); });
  const auto b = DirichletSeries::from(120, [](std::uint64_t n) { return Rational(1, static_cast<long>(n)); });
  const auto c = a * b;
  for (std::uint64_t n = 1; n <= 120; ++n) {
    Rational s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += a[d] * b[n / d];
    CHECK(c[n] == s);
  }
}

TEST_CASE("zeta(s-m)/zeta(s) generates J_m") {
  for (long m = 1; m <= 3; ++m) {
    const auto j = DirichletSeries::zeta_shifted(200, -m) * DirichletSeries::inverse_zeta_shifted(200, 0);
    for (std::uint64_t n = 1; n <= 200; ++n) CHECK(j[n] == Rational(oracle::jordan_by_divisor_law(static_cast<unsigned>(m), n)));
  }
}

TEST_CASE("first difference") {
  auto a = DirichletSeries::zeta_shifted(50, 0);
  auto b = a;
  CHECK(first_difference(a, b) == 0);
  b[17] += 1;
  CHECK(first_difference(a, b) == 17);
}
