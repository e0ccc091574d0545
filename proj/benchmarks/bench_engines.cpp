#include <benchmark/benchmark.h>

#include "kron22/kron.hpp"
#include "kron22/oracle.hpp"
#include "kron22/polygon.hpp"

using namespace kron22;

static void BM_ReducedCount(benchmark::State& state) {
  const long long scale = state.range(0);
  ReducedIndex h{13 * scale, 8 * scale, 10 * scale, 6 * scale};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_kron_count(h));
  state.SetComplexityN(scale);
}
BENCHMARK(BM_ReducedCount)->RangeMultiplier(4)->Range(1, 1024)->Complexity();

static void BM_ReducedChamber(benchmark::State& state) {
  const long long scale = state.range(0);
  ReducedIndex h{13 * scale, 8 * scale, 10 * scale, 6 * scale};
  ChamberCatalog::standard();  // build outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(reduced_kron_fast(h));
}
BENCHMARK(BM_ReducedChamber)->RangeMultiplier(4)->Range(1, 1024);

static void BM_TwoRowSweep(benchmark::State& state) {
  const long long n = state.range(0);
  auto idxs = valid_indices_of_weight(n);
  for (auto _ : state) {
    long long acc = 0;
    for (const KronIndex& idx : idxs) acc += kron_two_row(idx, Engine::Chamber);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(idxs.size()));
}
BENCHMARK(BM_TwoRowSweep)->Arg(10)->Arg(20)->Arg(40);

static void BM_CharacterTableBuild(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    OracleConfig cfg;
    cfg.disk_cache = false;
    Oracle oracle(cfg);
    benchmark::DoNotOptimize(oracle.table(n));
  }
}
BENCHMARK(BM_CharacterTableBuild)->Arg(8)->Arg(12)->Arg(16);

static void BM_OracleKron(benchmark::State& state) {
  const long long n = state.range(0);
  OracleConfig cfg;
  cfg.disk_cache = false;
  cfg.cap = 22;
  Oracle oracle(cfg);
  oracle.table(n);
  Partition la({n - 2, 1, 1}), mu({n - 3, 3}), nu({n - 4, 4});
  for (auto _ : state) benchmark::DoNotOptimize(oracle.kronecker(la, mu, nu));
}
BENCHMARK(BM_OracleKron)->Arg(12)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
