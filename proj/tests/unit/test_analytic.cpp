#include <doctest.h>

#include "oracles.hpp"
#include "vpv/analytic.hpp"
#include "vpv/errors.hpp"
#include "vpv/totients.hpp"

#include <cmath>
#include <numbers>

using namespace vpv;

TEST_CASE("zeta at even integers and at 3") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(zeta(2) - pi * pi / 6) < 1e-12);
  CHECK(std::abs(zeta(4) - std::pow(pi, 4) / 90) < 1e-12);
  CHECK(std::abs(zeta(3) - 1.2020569031595942) < 1e-12);
  CHECK(zeta_error_bound(2, 10'000) < 1e-12);
  CHECK_THROWS(zeta(1.0));
}

TEST_CASE("truncation control validates its arguments") {
  CHECK_THROWS_AS(TruncationControl(1, 1e-10), UsageError);
  CHECK_THROWS_AS(TruncationControl(10, 0.0), UsageError);
  CHECK_THROWS_AS(TruncationControl(10, 1.5), UsageError);
}

TEST_CASE("Dirichlet series of c_k(n): residual shrinks with K") {
  const std::vector<std::vector<std::int64_t>> ns = {{1}, {6}, {2, 4}, {3, 6, 9}, {4, 8}};
  for (const auto& n : ns)
    for (double s : {1.0, 1.5, 2.0}) {
      const auto a = dirichlet_partial_cohen(s, n, 100);
      const auto b = dirichlet_partial_cohen(s, n, 1000);
      const auto c = dirichlet_partial_cohen(s, n, 10000);
      CHECK(b.residual < a.residual);
      CHECK(c.residual < b.residual);
      CHECK(c.residual < 1e-2);
      // target recomputed here: sigma_{m-1-s}(g) / zeta(s+1)
      std::uint64_t g = 0;
      for (auto v : n) g = std::gcd(g, static_cast<std::uint64_t>(std::llabs(v)));
      double sig = 0;
      for (std::uint64_t d = 1; d <= g; ++d)
        if (g % d == 0) sig += std::pow(static_cast<double>(d), static_cast<double>(n.size()) - 1 - s);
      CHECK(std::abs(c.target - sig / zeta(s + 1)) < 1e-12);
    }
  const std::vector<std::int64_t> zero = {0, 0};
  const std::vector<std::int64_t> one = {1};
  CHECK_THROWS_AS(dirichlet_partial_cohen(1.0, zero, 100), DomainError);
  CHECK_THROWS_AS(dirichlet_partial_cohen(0.0, one, 100), DomainError);
}

TEST_CASE("mean value of c_k(n)/k") {
  const std::vector<std::int64_t> one = {1};
  CHECK(ramanujan_mean_zero(one, 1) == doctest::Approx(1.0));
  CHECK(std::abs(ramanujan_mean_zero(one, 100'000)) < 0.01);
  double direct = 0;
  for (std::uint64_t d = 1; d <= 5000; ++d) direct += oracle::mobius(d) / static_cast<double>(d);
  CHECK(moebius_harmonic_partial(5000) == doctest::Approx(direct).epsilon(1e-12));
  const std::vector<std::int64_t> two = {2, 2};
  for (std::uint64_t K : {100u, 1000u, 10000u})
    CHECK(ramanujan_mean_zero(two, K) == doctest::Approx(ramanujan_mean_direct(two, K)).epsilon(1e-9));
  // the limit is 0, approached slowly and not monotonically
  CHECK(std::abs(ramanujan_mean_zero(two, 1'000'000)) < 0.01);
}
