#include <benchmark/benchmark.h>

#include "darkstate/construction.hpp"
#include "darkstate/dfs.hpp"
#include "darkstate/solver.hpp"
#include "darkstate/verify.hpp"

using namespace darkstate;

static void BM_DarkBasis(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dark_basis(n, d));
}
BENCHMARK(BM_DarkBasis)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({3, 3})->Args({6, 3});

static void BM_SemidarkBasis(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semidark_basis(n, 2));
}
BENCHMARK(BM_SemidarkBasis)->Arg(4)->Arg(6)->Arg(8);

static void BM_CollectiveApply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  StateVector psi = p_all_state(2);
  for (int k = 2; k < n; k += 2) psi = tensor(psi, p_all_state(2));
  CollectiveOperator jp(spin_ladder(2, Ladder::raise), n);
  for (auto _ : state) benchmark::DoNotOptimize(jp.apply(psi));
}
BENCHMARK(BM_CollectiveApply)->Arg(4)->Arg(8)->Arg(12);

static void BM_IsDarkRandom(benchmark::State& state) {
  StateVector psi = psi4();
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(is_dark_random(psi, 10, 1e-8, rng));
}
BENCHMARK(BM_IsDarkRandom);

static void BM_CollectiveChannel(benchmark::State& state) {
  LogicalEncoding enc;
  StateVector psi = enc.encode(1, Complex(0, 1));
  Rng rng(11);
  ChannelSpec spec{NoiseGroup::sud, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(collective_channel(psi, spec, rng));
}
BENCHMARK(BM_CollectiveChannel)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
