#include <doctest.h>

#include "oracles.hpp"
#include "vpv/errors.hpp"
#include "vpv/series.hpp"
#include "vpv/totients.hpp"

using namespace vpv;

namespace {

std::map<std::uint64_t, Rational> jordan_exponents(unsigned m, std::size_t order) {
  std::map<std::uint64_t, Rational> e;
  for (std::uint64_t k = 1; k <= order; ++k) e[k] = -Rational(jordan(m, k)) / Rational(static_cast<long>(k));
  return e;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const PowerSeries a({Rational(1), Rational(2), Rational(3)});
  const PowerSeries b({Rational(1), Rational(-1), Rational(0)});
  const PowerSeries p = a * b;
  CHECK(p[0] == 1);
  CHECK(p[1] == 1);
  CHECK(p[2] == 1);
  CHECK(first_difference(a, a) == -1);
  CHECK(first_difference(a, b) == 1);
  CHECK(PowerSeries::inverse_one_minus_z_pow(2, 5)[5] == 6);
  CHECK(PowerSeries::monomial(Rational(3), 9, 4) == PowerSeries(4));
}

TEST_CASE("exp and log are inverse") {
  PowerSeries a(20);
  for (std::size_t i = 1; i <= 20; ++i) a[i] = make_rational(static_cast<long>(i * i) - 3, static_cast<long>(i + 1));
  CHECK(ps_log(ps_exp(a)) == a);
  const PowerSeries e = ps_exp(a);
  CHECK(ps_exp(ps_log(e)) == e);
  CHECK(ps_mul(ps_pow_rational(e, Rational(1, 2)), ps_pow_rational(e, Rational(1, 2))) == e);
  CHECK_THROWS_AS(ps_exp(PowerSeries::constant(Rational(1), 4)), DomainError);
  CHECK_THROWS_AS(ps_log(PowerSeries::constant(Rational(2), 4)), DomainError);
}

TEST_CASE("exp(z) has coefficients 1/n!") {
  const PowerSeries e = ps_exp(PowerSeries::monomial(Rational(1), 1, 15));
  for (unsigned n = 0; n <= 15; ++n) CHECK(e[n] == Rational(1) / Rational(factorial(n)));
}

TEST_CASE("partition generating function") {
  std::map<std::uint64_t, Rational> e;
  for (std::uint64_t k = 1; k <= 64; ++k) e[k] = -1;
  const PowerSeries p = product_with_exponents(e, 64);
  const auto ref = oracle::partitions(64);
  for (std::size_t n = 0; n <= 64; ++n) CHECK(p[n] == Rational(ref[n]));
  std::map<std::uint64_t, Rational> bad = {{65, Rational(1)}};
  CHECK_THROWS_AS(product_with_exponents(bad, 64), UsageError);
}

TEST_CASE("Jordan product equals exp of the power-weighted geometric series") {
  for (unsigned m = 1; m <= 4; ++m) {
    const PowerSeries lhs = product_with_exponents(jordan_exponents(m, 64), 64);
    PowerSeries weights(64);
    for (std::size_t k = 1; k <= 64; ++k) weights[k] = rpow(Rational(static_cast<long>(k)), m - 1);
    CHECK(power_weighted_geometric(m - 1, 64) == weights);
    CHECK(lhs == ps_exp(weights));
  }
}

TEST_CASE("Stirling form of sum k^{m-1} z^k") {
  for (unsigned m = 2; m <= 8; ++m) {
    PowerSeries ref(32);
    for (std::size_t k = 0; k <= 32; ++k) ref[k] = rpow(Rational(static_cast<long>(k)), m - 1);
    CHECK(stirling_rhs_series(m, 32) == ref);
  }
}

TEST_CASE("finite Stirling sums at rational points") {
  const Rational zs[] = {Rational(1, 2), Rational(-1, 3), Rational(2), Rational(3, 7)};
  for (unsigned m = 1; m <= 6; ++m)
    for (std::uint64_t n = 1; n <= 12; ++n)
      for (const auto& z : zs) {
        CHECK(finite_stirling_check(m, n, z));
        // left side summed here directly
        Rational direct = 0;
        for (std::uint64_t k = 0; k < n; ++k) direct += rpow(Rational(static_cast<long>(k)), m - 1) * rpow(z, static_cast<long>(k));
        CHECK(finite_stirling_sides(m, n, z).lhs == direct);
      }
  CHECK_THROWS_AS(finite_stirling_check(2, 3, Rational(1)), DomainError);
}
