#include <benchmark/benchmark.h>

#include "sdepth/block_structure.hpp"
#include "sdepth/lifted_intervals.hpp"
#include "sdepth/oracle.hpp"
#include "sdepth/partition_builder.hpp"
#include "sdepth/verifier.hpp"

using namespace sdepth;

static void BM_BlockStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CircularSet a(n);
  for (int x = 1; x <= n; x += 3) a.insert(x);
  for (auto _ : state) benchmark::DoNotOptimize(block_structure(a, Density(2)));
}
BENCHMARK(BM_BlockStructure)->Arg(16)->Arg(64)->Arg(256);

static void BM_IntervalFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(interval_family(n, 3, 0, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(n, 3)));
}
BENCHMARK(BM_IntervalFamily)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_BuildPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(n, d));
}
BENCHMARK(BM_BuildPartition)->Args({10, 2})->Args({14, 3})->Args({18, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildPartitionImplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(n, 1, {.materialize_trivial = false}));
}
BENCHMARK(BM_BuildPartitionImplicit)->Arg(20)->Arg(29)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto p = build_partition(n, d).partition;
  for (auto _ : state) benchmark::DoNotOptimize(verify_partition(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.intervals.size()));
}
BENCHMARK(BM_Verify)->Args({10, 2})->Args({14, 3})->Args({18, 4})->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_sdepth(n, 2));
}
BENCHMARK(BM_Oracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
