#include <doctest.h>

#include "oracles.hpp"
#include "vpv/engine.hpp"
#include "vpv/errors.hpp"

using namespace vpv;

namespace {

Rational naive_grid(unsigned m, std::uint64_t k, const std::vector<Rational>& bs) {
  Rational s = 0;
  oracle::grid(static_cast<unsigned>(bs.size()), k, [&](const auto& A) {
    Rational dot = 0;
    for (std::size_t i = 0; i < A.size(); ++i) dot += bs[i] * static_cast<long>(A[i]);
    s += rpow(dot / static_cast<long>(k), static_cast<long>(m));
  });
  return s;
}

}  // namespace

TEST_CASE("first bracket coefficients") {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    CHECK(bracket_T(1, k) == Rational(1, 2));
    CHECK(bracket_T(2, k) == 1 - Rational(1, 6 * static_cast<long>(k)));
  }
}

TEST_CASE("grid power sums") {
  const std::vector<std::vector<Rational>> cases = {
      {Rational(1)}, {Rational(1), Rational(2)}, {Rational(-1, 2), Rational(3)}, {Rational(1), Rational(1), Rational(2)}};
  for (const auto& bs : cases)
    for (unsigned m = 0; m <= 4; ++m)
      for (std::uint64_t k = 1; k <= 5; ++k) {
        const Rational g = bracket_grid(m, k, bs);
        CHECK(g == naive_grid(m, k, bs));
        CHECK(g == Rational(factorial(m)) * rpow(Rational(static_cast<long>(k)), static_cast<long>(bs.size())) *
                       bracket_oracle(m, k, bs));
      }
}

TEST_CASE("the displayed bracket polynomial is not the grid sum") {
  const std::vector<Rational> bs = {Rational(1), Rational(1)};
  CHECK(bracket_polynomial(1, 2, bs) == Rational(11, 12));
  CHECK(bracket_oracle(1, 2, bs) == Rational(1, 2));
}

TEST_CASE("bracket summation sides") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const std::uint64_t n = 2 + rng() % 12;
    const auto a = random_sequence(rng, n, n);
    std::vector<FiniteSequence> bs = {random_sequence(rng, n, n, 3, 1), random_sequence(rng, n, n, 3, 1)};
    for (unsigned m = 1; m <= 3; ++m) CHECK(bracket_summation_sides(m, a, bs).equal());
  }
  const auto delta = FiniteSequence::indicator(2, 2);
  const std::vector<FiniteSequence> ones = {FiniteSequence::constant(2, 1), FiniteSequence::constant(2, 1)};
  CHECK(bracket_summation_sides(1, delta, ones).equal());
  CHECK_FALSE(bracket_summation_sides(1, delta, ones, true).equal());
}
