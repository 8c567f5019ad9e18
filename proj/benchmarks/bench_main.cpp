#include <benchmark/benchmark.h>

#include <random>

#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/free_trees.hpp"
#include "treeprof/search.hpp"
#include "treeprof/subtrees.hpp"

namespace {

using namespace treeprof;

Tree seeded_tree(int n) {
  std::mt19937_64 rng(42);
  return random_tree(rng, n);
}

void BM_canonicalize(benchmark::State& state) {
  const Tree t = seeded_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(t));
  }
}
BENCHMARK(BM_canonicalize)->Arg(64)->Arg(256)->Arg(1024);

void BM_count_subtrees_dp(benchmark::State& state) {
  const Tree host = universal_tree(4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_subtrees(host, k));
  }
}
BENCHMARK(BM_count_subtrees_dp)->Arg(4)->Arg(5)->Arg(8);

void BM_census(benchmark::State& state) {
  const Tree host = sparkler_host({4, 2, 12});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subtree_code_census(host, 6, threads));
  }
}
BENCHMARK(BM_census)->Arg(1)->Arg(4);

void BM_density(benchmark::State& state) {
  const Tree pattern = sparkler(4);
  const Tree host = sparkler_host({4, 1, 12});
  for (auto _ : state) {
    benchmark::DoNotOptimize(density(pattern, host, 1));
  }
}
BENCHMARK(BM_density);

void BM_profile(benchmark::State& state) {
  const Tree host = seeded_tree(40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile(host, 5, 1));
  }
}
BENCHMARK(BM_profile);

void BM_free_trees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_free_trees(n));
  }
}
BENCHMARK(BM_free_trees)->Arg(9)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
