// Parallel kernels against their serial references. The second argument of the
// threaded benchmarks is the OpenMP thread count.

#include <benchmark/benchmark.h>

#include <random>

#include "hap/clique.hpp"
#include "hap/housing.hpp"
#include "hap/intersecting.hpp"
#include "hap/parallel.hpp"
#include "hap/properties.hpp"

using namespace hap;

namespace {

PreferenceProfile bench_profile(int m) {
  std::mt19937_64 rng(77 + m);
  return random_profile(m, 2 * m, m + 1, rng);
}

Graph random_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

void BM_ReachSerial(benchmark::State& state) {
  auto p = bench_profile(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::reachable_family_by_permutations(p));
}

void BM_ReachParallel(benchmark::State& state) {
  auto p = bench_profile(static_cast<int>(state.range(0)));
  parallel::ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reachable_family_by_permutations(p));
}

void BM_OnePom(benchmark::State& state) {
  auto p = bench_profile(static_cast<int>(state.range(0)));
  parallel::ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reachable_family_by_one_poms(p));
}

void BM_PropertyBruteForce(benchmark::State& state) {
  auto f = h_construction(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::has_property_bruteforce(f, m, Property::Q));
}

void BM_PropertyKernel(benchmark::State& state) {
  auto f = h_construction(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(0));
  parallel::ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(has_property_q(f, m, CheckMode::Exact));
}

void BM_CliqueBruteForce(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::max_clique_size_bruteforce(g));
}

void BM_CliqueParallel(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 5);
  parallel::ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g));
}

void BM_CandidateFamilyEnumerated(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::frankl_family_size_enumerated(16, 6, 2, 2));
}

void BM_CandidateFamilyClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frankl_family_size(16, 6, 2, 2));
}

}  // namespace

BENCHMARK(BM_ReachSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReachParallel)->ArgsProduct({{6, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OnePom)->ArgsProduct({{5, 6}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PropertyBruteForce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropertyKernel)->ArgsProduct({{3, 4}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CliqueBruteForce)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueParallel)->ArgsProduct({{16, 20, 60}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CandidateFamilyEnumerated)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CandidateFamilyClosedForm);

BENCHMARK_MAIN();
