#include <benchmark/benchmark.h>

#include <numeric>

#include "catins/catabolism.hpp"
#include "catins/chains.hpp"
#include "catins/cocharge.hpp"
#include "catins/insertion.hpp"
#include "catins/poset.hpp"
#include "catins/tableau.hpp"

namespace {

using namespace catins;

const Word kExample = {1, 6, 8, 4, 2, 9, 5, 7, 3};

void BM_run_f(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_f(kExample));
  }
}
BENCHMARK(BM_run_f);

void BM_ctype_greedy(benchmark::State& state) {
  Tableau p = row_insert(kExample);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctype_greedy(p));
  }
}
BENCHMARK(BM_ctype_greedy);

void BM_expand_full_run(benchmark::State& state) {
  for (auto _ : state) {
    Trace t = run_f(kExample);
    WordPartitionPair s{t.initial, {}};
    for (const Step& step : t.steps) {
      benchmark::DoNotOptimize(expand_step(s));
      s = step.result;
    }
  }
}
BENCHMARK(BM_expand_full_run);

void BM_max_family(benchmark::State& state) {
  Word z = cocharge_label(kExample);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_family_size(z, k));
  }
}
BENCHMARK(BM_max_family)->Arg(1)->Arg(3)->Arg(6);

void BM_family_with_lengths(benchmark::State& state) {
  Word z = cocharge_label(kExample);
  Partition target = conjugate(algorithm_f(kExample));
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_with_lengths(z, target));
  }
}
BENCHMARK(BM_family_with_lengths);

void BM_all_syt(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_syt(n));
  }
}
BENCHMARK(BM_all_syt)->Arg(6)->Arg(8);

void BM_cocyclage_edges(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cocyclage_edges(n));
  }
}
BENCHMARK(BM_cocyclage_edges)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
