#include <benchmark/benchmark.h>

#include "kpath/approx.hpp"
#include "kpath/exact.hpp"
#include "kpath/generators.hpp"
#include "kpath/ktree.hpp"
#include "kpath/oracle.hpp"

namespace {

using namespace kpath;

WeightedGraph bench_graph(int n, std::int64_t m) {
  Rng rng(stream_seed(7, 1));
  return random_graph(n, 0.2, true, -m, m, rng);
}

// One unamplified run; args: k, M.
void BM_MinKPathOnce(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const WeightedGraph g = bench_graph(30, state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(min_kpath_weight_once(g, k, rng));
  }
}
BENCHMARK(BM_MinKPathOnce)->Args({4, 10})->Args({6, 10})->Args({8, 10})->Args({6, 20})->Args({6, 40})
    ->Unit(benchmark::kMillisecond);

void BM_KTreeOnce(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const WeightedGraph g = bench_graph(20, 10);
  Rng tree_rng(3);
  const TreePattern t = random_tree(k, tree_rng);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(min_ktree_weight_once(g, t, rng));
  }
}
BENCHMARK(BM_KTreeOnce)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SubsetDpOracle(benchmark::State& state) {
  const WeightedGraph g = bench_graph(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_min_kpath(g, 5));
}
BENCHMARK(BM_SubsetDpOracle)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_ApproxMinKPath(benchmark::State& state) {
  Rng rng(11);
  const WeightedGraph g = random_real_graph(20, 0.25, true, 1, 1e6, rng);
  ApproxConfig cfg;
  cfg.k = 4;
  cfg.epsilon = 1.0 / static_cast<double>(state.range(0));
  cfg.inner.repetitions = 20;
  for (auto _ : state) benchmark::DoNotOptimize(approx_min_kpath(g, cfg));
}
BENCHMARK(BM_ApproxMinKPath)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
