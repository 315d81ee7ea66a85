#include <doctest.h>

#include "oracles.hpp"
#include "vpv/engine.hpp"
#include "vpv/errors.hpp"
#include "vpv/totients.hpp"

#include <cmath>

using namespace vpv;

namespace {

double random_x(std::mt19937_64& rng) {
  const double v = static_cast<double>(1 + rng() % 9) / 10.0;
  return (rng() % 2) ? v : -v;
}

}  // namespace

TEST_CASE("tail sums against a direct loop") {
  std::mt19937_64 rng(7);
  const auto a = random_sequence(rng, 30, 30);
  for (std::uint64_t k = 1; k <= 30; ++k) {
    Rational s = 0;
    for (std::uint64_t i = k; i <= 30; i += k) s += a[i];
    CHECK(tail_sum(a, k) == s);
  }
  CHECK(a[0] == 0);
  CHECK(a[31] == 0);
  CHECK_THROWS_AS(tail_sum(a, 0), UsageError);
}

TEST_CASE("lemma: randomized over seeds and dimensions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const unsigned m = 1 + seed % 3;
    const std::uint64_t n = 1 + rng() % 40;
    const auto a = random_sequence(rng, n, std::min<std::uint64_t>(n, 12));
    std::vector<double> q(m);
    for (auto& v : q) v = static_cast<double>(1 + rng() % 98) / 100.0;
    CHECK(lemma_3_2_check(a, q).residual < 1e-9);
  }
}

TEST_CASE("summation formulas with exponentials: randomized") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t n = 1 + rng() % 40;
    const auto a = random_sequence(rng, n, std::min<std::uint64_t>(n, 12));
    std::vector<FiniteSequence> bs;
    for (int h = 0; h < 3; ++h) bs.push_back(random_sequence(rng, n, n, 4, 2));
    const double x = random_x(rng);
    const auto s1 = thm_5_1_check(a, bs[0], x);
    const auto s2 = thm_5_2_check(a, bs[0], bs[1], x);
    CHECK(s1.residual < 1e-9);
    CHECK(s2.residual < 1e-9);
    CHECK(thm_5_10_check(a, std::span(bs.data(), 1), x).residual < 1e-9);
    const auto t2 = thm_5_10_check(a, std::span(bs.data(), 2), x);
    CHECK(t2.residual < 1e-9);
    CHECK(std::abs(t2.lhs - s2.lhs) <= 1e-9 * std::max(1.0, std::abs(s2.lhs)));
    CHECK(thm_5_10_check(a, bs, x).residual < 1e-8);
  }
}

TEST_CASE("the printed inner range of the 2-D formula disagrees") {
  const auto a = FiniteSequence::indicator(6, 6);
  const auto b = FiniteSequence::constant(6, 1);
  CHECK(thm_5_1_check(a, b, 1.0, InnerSumReading::Resolved).residual < 1e-12);
  CHECK(thm_5_1_check(a, b, 1.0, InnerSumReading::Printed).residual > 1e-3);
  const auto zero_b = FiniteSequence(6);
  CHECK_THROWS_AS(thm_5_1_check(a, zero_b, 1.0), DomainError);
}

TEST_CASE("exact Jordan summation identities") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto s = square_sum_sides(n);
    CHECK(s.equal());
    CHECK(s.lhs == Rational(static_cast<long>(n * (n + 1) * (2 * n + 1) / 6)));
  }
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const std::uint64_t n = 1 + rng() % 100;
    const auto a = random_sequence(rng, n, std::min<std::uint64_t>(n, 20));
    for (unsigned m = 1; m <= 4; ++m) CHECK(jordan_summation_sides(a, m).equal());
  }
  for (unsigned m = 1; m <= 3; ++m)
    for (std::uint64_t n = 1; n <= 60; ++n) {
      CHECK(jordan_floor_sides(m, n).equal());
      CHECK(jordan_power_sides(m, static_cast<long>(m) + 1, n).equal());
      CHECK(jordan_geometric_sides(m, n, Rational(1, 3)).equal());
    }
  CHECK(jordan_power_sides(2, 0, 17).lhs == 17);
}

TEST_CASE("geometric form: the dropped z^j factor") {
  // n = 2, m = 1, z = 1/2: left side 1/2 + 2/4 = 1
  const auto good = jordan_geometric_sides(1, 2, Rational(1, 2));
  CHECK(good.lhs == 1);
  CHECK(good.rhs == 1);
  const auto bad = jordan_geometric_sides(1, 2, Rational(1, 2), true);
  CHECK(bad.lhs == 1);
  CHECK(bad.rhs == Rational(5, 2));
  CHECK_THROWS_AS(jordan_geometric_sides(1, 4, Rational(-1)), DomainError);
}

TEST_CASE("three-variable product converges") {
  const auto r20 = cor_5_3_check(0.3, 0.2, 0.25, 20);
  const auto r40 = cor_5_3_check(0.3, 0.2, 0.25, 40);
  CHECK(r40.residual < 1e-6);
  CHECK(r40.residual <= r20.residual + 1e-15);
  CHECK_THROWS_AS(cor_5_3_check(0.3, 0.2, 1.5, 20), DomainError);
}

TEST_CASE("hyperpyramid product") {
  const std::vector<double> x = {0.3, 0.4};
  const std::vector<Rational> b = {Rational(1, 2), Rational(1, 2)};
  const auto r = hyperpyramid_check(x, b, 30);
  CHECK(r.matched_residual < 1e-9);
  // a_1 >= 0 literally: the extra a_1 = 0 ray contributes -log(1 - x_2)
  const std::vector<double> x2 = {0.3, 0.5};
  const std::vector<Rational> apex_only = {Rational(0), Rational(1)};
  const auto lit = hyperpyramid_check(x2, apex_only, 40, 0);
  CHECK(lit.naive_lhs - lit.converged_rhs == doctest::Approx(-std::log(1 - 0.5)).epsilon(1e-9));
  CHECK(hyperpyramid_check(x2, apex_only, 40, 1).naive_residual < 1e-8);
  CHECK_THROWS_AS(hyperpyramid_check(x, b, 30, 0), DomainError);
}
