#include "vpv/analytic.hpp"
#include "vpv/audit.hpp"
#include "vpv/engine.hpp"
#include "vpv/series.hpp"
#include "vpv/totients.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace vpv;

static void BM_RamanujanClosed(benchmark::State& state) {
  const std::vector<std::int64_t> n = {12, 18, 30};
  for (auto _ : state)
    for (std::uint64_t k = 1; k <= 200; ++k) benchmark::DoNotOptimize(ramanujan_cohen(k, n));
}
BENCHMARK(BM_RamanujanClosed);

static void BM_RamanujanEnum(benchmark::State& state) {
  const std::vector<std::int64_t> n = {4, 6};
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ramanujan_cohen_enum(k, n));
}
BENCHMARK(BM_RamanujanEnum)->Arg(30)->Arg(120)->Arg(480);

static void BM_Jordan(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint64_t k = 1; k <= 1000; ++k) benchmark::DoNotOptimize(jordan(3, k));
}
BENCHMARK(BM_Jordan);

static void BM_PhiClosed(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint64_t k = 2; k <= 100; ++k) benchmark::DoNotOptimize(phi_t_closed(2, 2, k));
}
BENCHMARK(BM_PhiClosed);

static void BM_JordanProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::map<std::uint64_t, Rational> exps;
    for (std::uint64_t k = 1; k <= order; ++k) exps[k] = -Rational(jordan(2, k)) / Rational(static_cast<unsigned long>(k));
    benchmark::DoNotOptimize(product_with_exponents(exps, order));
  }
}
BENCHMARK(BM_JordanProduct)->Arg(32)->Arg(64)->Arg(128);

static void BM_PsExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ps_exp(power_weighted_geometric(2, order)));
}
BENCHMARK(BM_PsExp)->Arg(32)->Arg(64)->Arg(128);

static void BM_VisiblePoints(benchmark::State& state) {
  const auto side = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(visible_points(RadialRegion::box({side, side, side})).size());
}
BENCHMARK(BM_VisiblePoints)->Arg(20)->Arg(60);

static void BM_ThetaProduct(benchmark::State& state) {
  ThetaVpvParams p;
  p.n = {2};
  p.cutoff = 40;
  p.extended_precision = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(theta_vpv_check(p).residual);
}
BENCHMARK(BM_ThetaProduct)->Arg(0)->Arg(1);

static void BM_AuditCheck(benchmark::State& state) {
  const std::vector<std::string> ids = {"eq-4.13", "eq-5.6", "cor-5.18b"};
  for (auto _ : state) benchmark::DoNotOptimize(audit::run_audit(ids, 1, 1).entries.size());
}
BENCHMARK(BM_AuditCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
