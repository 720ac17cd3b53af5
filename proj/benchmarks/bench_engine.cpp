#include <benchmark/benchmark.h>

#include "rwgraph/paperdata.hpp"
#include "rwgraph/polywheel.hpp"
#include "rwgraph/recover.hpp"
#include "rwgraph/sheffer.hpp"

using namespace rwgraph;

static void BM_CanonicalizeWheel(benchmark::State& state) {
  FlagGraph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(g));
  }
}
BENCHMARK(BM_CanonicalizeWheel)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_ClosureOfWheelPower(benchmark::State& state) {
  GraphVector v = power(GraphVector::of(wheel(2)), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(v));
  }
}
BENCHMARK(BM_ClosureOfWheelPower)->Arg(2)->Arg(3)->Arg(4);

static void BM_CrossValidateDegree8(benchmark::State& state) {
  Partition lam = Partition::parse("2,2,2,2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_validate(lam, 8));
  }
}
BENCHMARK(BM_CrossValidateDegree8);

static void BM_ShefferShiftCheck(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  TruncSeries one = TruncSeries::constant(order, MultiPoly(1));
  TruncSeries b = TruncSeries::t(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sheffer_shift_check(one, b, order));
  }
}
BENCHMARK(BM_ShefferShiftCheck)->Arg(6)->Arg(10)->Arg(14);

static void BM_Reversion(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  TruncSeries u = series_exp(TruncSeries::t(order)).shifted_by_t();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reversion(u));
  }
}
BENCHMARK(BM_Reversion)->Arg(8)->Arg(16);

static void BM_BetaTable(benchmark::State& state) {
  ChernTable table = published_chern_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_beta_table(3, table));
  }
}
BENCHMARK(BM_BetaTable);

static void BM_RecoverAD(benchmark::State& state) {
  ChernTable table = published_chern_table();
  auto records = compute_beta_table(3, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_AD(records, 3));
  }
}
BENCHMARK(BM_RecoverAD);

BENCHMARK_MAIN();
