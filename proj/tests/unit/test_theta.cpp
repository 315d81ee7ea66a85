#include <doctest.h>

#include "vpv/analytic.hpp"
#include "vpv/errors.hpp"

#include <cmath>
#include <numbers>

using namespace vpv;

TEST_CASE("theta_1 basics") {
  CHECK(theta1(0.0, 0.3) == 0.0);
  for (double z : {0.2, 1.3, 2.9})
    for (double q : {0.05, 0.4}) CHECK(theta1(-z, q) == doctest::Approx(-theta1(z, q)));
  // two terms of the series: 2 q^{1/4} (1 + q^2) at z = pi/2
  const double q = 0.01;
  const double two_terms = 2 * std::pow(q, 0.25) * (1 + q * q);
  CHECK(std::abs(theta1(std::numbers::pi / 2, q) - two_terms) < 1e-10);
  CHECK_THROWS_AS(theta1(0.5, 1.0), DomainError);
}

TEST_CASE("theta_1 series equals the triple product") {
  for (double z : {0.3, 0.7, 1.1, 2.0})
    for (double q : {0.01, 0.1, 0.3, 0.6}) CHECK(std::abs(theta1(z, q) - theta1_product(z, q)) < 1e-12);
}

TEST_CASE("the shifted display is a different function") {
  CHECK(std::abs(theta1_shifted_display(0.7, 0.1) - theta1(0.7, 0.1)) > 0.1);
}

TEST_CASE("log-ratio identity on the 27-point grid") {
  const TruncationControl trunc(60, 1e-15);
  for (double a : {0.3, 0.7, 1.1})
    for (double b : {0.1, 0.2, 0.45})
      for (double q : {0.05, 0.1, 0.3}) {
        const auto s = theta_log_ratio_check(a, b, q, trunc);
        CHECK(std::abs(s.lhs - s.rhs) < 1e-10);
      }
  const auto zero = theta_log_ratio_check(0.7, 0.3, 0.0);
  CHECK(zero.lhs == 0.0);
  CHECK(std::abs(zero.rhs) < 1e-15);
  CHECK_THROWS_AS(theta_log_ratio_check(0.4, 0.4, 0.1), DomainError);
}

namespace {

ThetaVpvParams cor62(std::int64_t n, std::uint64_t K) {
  ThetaVpvParams p;
  p.id = ThetaIdentity::Cor6_2;
  p.n = {n};
  p.q = 0.1;
  p.cutoff = K;
  return p;
}

}  // namespace

TEST_CASE("Ramanujan theta product at n = 2") {
  const auto r = theta_vpv_check(cor62(2, 40));
  CHECK(r.pass);
  CHECK(r.residual < 1e-8);
  double prev = 1.0;
  for (std::uint64_t K : {20u, 40u, 80u}) {
    const auto t = theta_vpv_check(cor62(2, K));
    CHECK(t.tail_residual <= prev + 1e-15);
    prev = t.tail_residual;
  }
}

TEST_CASE("literal readings do not hold") {
  auto p = cor62(2, 40);
  p.reading = SineReading::RepeatedAlpha;
  CHECK_FALSE(theta_vpv_check(p).pass);
  p.reading = SineReading::UndilatedRatio;
  CHECK_FALSE(theta_vpv_check(p).pass);
  p.reading = SineReading::Corrected;
  p.printed_product_from_one = true;
  CHECK_FALSE(theta_vpv_check(p).pass);
}

TEST_CASE("reductions between the theta identities") {
  ThetaVpvParams tot;
  tot.id = ThetaIdentity::Cor6_3;
  ThetaVpvParams jor = tot;
  jor.id = ThetaIdentity::Cor6_5;
  jor.m = 1;
  const auto a = theta_vpv_check(tot), b = theta_vpv_check(jor);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.pass);

  auto gen = cor62(2, 40);
  gen.id = ThetaIdentity::Cor6_6;
  const auto c = theta_vpv_check(cor62(2, 40)), d = theta_vpv_check(gen);
  CHECK(c.lhs == d.lhs);
  CHECK(c.rhs == d.rhs);

  gen.n = {2, 4};
  CHECK(theta_vpv_check(gen).pass);
  gen.printed_left_weights = true;
  CHECK_FALSE(theta_vpv_check(gen).pass);
}

TEST_CASE("real and rotation inputs") {
  ThetaVpvParams p;
  p.id = ThetaIdentity::Thm6_1;
  p.x = {0.5};
  CHECK(theta_vpv_check(p).pass);
  p.x.clear();
  p.rotations = {0.25};
  CHECK(theta_vpv_check(p).pass);
  p.x = {0.5};
  CHECK_THROWS_AS(theta_vpv_check(p), UsageError);

  ThetaVpvParams h;
  h.id = ThetaIdentity::Thm6_4;
  h.x = {0.3, 0.6, 0.8};
  CHECK(theta_vpv_check(h).pass);
}

TEST_CASE("non-convergent regimes are skipped") {
  auto p = cor62(2, 40);
  p.q = 1.2;
  const auto r = theta_vpv_check(p);
  CHECK(r.skipped);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("extended precision resolves the truncation error") {
  auto p = cor62(2, 20);
  p.extended_precision = true;
  std::vector<double> tails;
  for (std::uint64_t K : {10u, 20u, 40u, 80u}) {
    p.cutoff = K;
    const auto r = theta_vpv_check(p);
    CHECK(r.pass);
    CHECK(r.residual < 1e-150);
    // the first omitted factor is of size q^{2(K+1)}
    CHECK(r.tail_residual < 10 * std::pow(0.1, 2.0 * static_cast<double>(K + 1)));
    tails.push_back(r.tail_residual);
  }
  CHECK(tails[0] > 1e-30);
  for (std::size_t i = 1; i < tails.size(); ++i) CHECK(tails[i] < tails[i - 1]);

  // agrees with the double path where double can see the difference
  auto d = cor62(2, 10);
  d.q = 0.5;
  auto x = d;
  x.extended_precision = true;
  CHECK(theta_vpv_check(x).tail_residual == doctest::Approx(theta_vpv_check(d).tail_residual).epsilon(1e-6));

  ThetaVpvParams h;
  h.id = ThetaIdentity::Thm6_4;
  h.x = {0.3, 0.6};
  h.extended_precision = true;
  CHECK_THROWS_AS(theta_vpv_check(h), UsageError);
}
