#include <doctest.h>

#include "oracles.hpp"
#include "vpv/errors.hpp"
#include "vpv/exact.hpp"

using namespace vpv;

TEST_CASE("rationals are canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
}

TEST_CASE("powers") {
  CHECK(rpow(Rational(0), 0) == 1);
  CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(rpow(Rational(0), -1), DomainError);
  CHECK(ipow(Integer(3), 4) == 81);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  for (unsigned n = 0; n <= 20; ++n) {
    Integer row = 0;
    for (unsigned k = 0; k <= n; ++k) row += binomial(n, k);
    CHECK(row == ipow(Integer(2), n));
  }
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("factorization, Moebius and divisors against trial division") {
  CHECK(factorize(1).empty());
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f.pairs()[0] == PrimePower{2, 3});
  CHECK(f.pairs()[1] == PrimePower{3, 2});
  CHECK(f.pairs()[2] == PrimePower{5, 1});
  CHECK(f.value() == 360);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK(moebius(n) == oracle::mobius(n));
    std::vector<std::uint64_t> d;
    for (std::uint64_t e = 1; e <= n; ++e)
      if (n % e == 0) d.push_back(e);
    CHECK(divisors(n) == d);
    CHECK(is_prime(n) == (n > 1 && d.size() == 2));
  }
  // past the sieve
  CHECK(factorize(kSieveLimit * 3 + 3).value() == Integer(static_cast<unsigned long>(kSieveLimit * 3 + 3)));
  CHECK(is_prime(1'000'003));
}

TEST_CASE("gcd of many") {
  CHECK(gcd_many({12, 18, 30}) == 6);
  CHECK(gcd_many({0, 0}) == 0);
  CHECK(gcd_many({0, 5}) == 5);
}

TEST_CASE("Bernoulli numbers satisfy the defining recurrence") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned m = 1; m <= 30; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational s = 0;
    for (unsigned j = 0; j <= m; ++j) s += Rational(binomial(m + 1, j)) * bernoulli(j);
    CHECK(s == 0);
    if (m > 1 && m % 2) CHECK(bernoulli(m) == 0);
  }
}

TEST_CASE("Stirling numbers of the second kind against the explicit sum") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 5) == 0);
  for (unsigned n = 0; n <= 15; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      Integer s = 0;
      for (unsigned i = 0; i <= j; ++i) {
        const Integer term = binomial(j, i) * ipow(Integer(j - i), n);
        s += (i % 2 ? -1 : 1) * term;
      }
      CHECK(stirling2(n, j) * factorial(j) == s);
    }
}

TEST_CASE("Faulhaber sums by both routes agree with direct summation") {
  for (unsigned m = 0; m <= 10; ++m)
    for (std::uint64_t k = 1; k <= 30; ++k) {
      Integer direct = 0;
      for (std::uint64_t a = 0; a < k; ++a) direct += ipow(Integer(static_cast<unsigned long>(a)), m);
      CHECK(faulhaber_sum(m, k) == direct);
      CHECK(faulhaber_sum_bernoulli(m, k) == direct);
    }
}
