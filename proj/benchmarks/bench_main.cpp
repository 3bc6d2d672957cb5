#include <benchmark/benchmark.h>

#include "kecore/canonical.hpp"
#include "kecore/corpus.hpp"
#include "kecore/critical.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "kecore/theorem_lab.hpp"
#include "kecore/unicyclic.hpp"

using namespace kecore;

namespace {

void BM_AlphaUnicyclic(benchmark::State& state) {
  const auto g = random_unicyclic(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(g));
}
BENCHMARK(BM_AlphaUnicyclic)->RangeMultiplier(4)->Range(16, 4096);

void BM_AlphaBranchAndBound(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(g, {}, AlphaMethod::branch_and_bound));
}
BENCHMARK(BM_AlphaBranchAndBound)->DenseRange(10, 40, 10);

void BM_MuLeafStripping(benchmark::State& state) {
  const auto g = random_unicyclic(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mu(g, MatchingMethod::leaf_stripping));
}
BENCHMARK(BM_MuLeafStripping)->RangeMultiplier(4)->Range(16, 4096);

void BM_MuBlossom(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mu(g, MatchingMethod::blossom));
}
BENCHMARK(BM_MuBlossom)->RangeMultiplier(4)->Range(16, 1024);

void BM_CriticalDifferenceFast(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(critical_difference_fast(g));
}
BENCHMARK(BM_CriticalDifferenceFast)->DenseRange(8, 16, 4);

void BM_CriticalDifferenceBruteForce(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(critical_difference_bruteforce(g).critical_difference);
}
BENCHMARK(BM_CriticalDifferenceBruteForce)->DenseRange(8, 16, 4);

void BM_StructuralKer(benchmark::State& state) {
  std::uint64_t seed = 0;
  Graph g;
  do g = random_unicyclic(static_cast<std::size_t>(state.range(0)), seed++);
  while (is_koenig_egervary(g));
  for (auto _ : state) benchmark::DoNotOptimize(structural_ker(g));
}
BENCHMARK(BM_StructuralKer)->RangeMultiplier(4)->Range(16, 256);

void BM_CanonicalCode(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 21);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->DenseRange(8, 32, 8);

void BM_TreeCode(benchmark::State& state) {
  const auto t = random_tree(static_cast<std::size_t>(state.range(0)), 21);
  for (auto _ : state) benchmark::DoNotOptimize(tree_code(t));
}
BENCHMARK(BM_TreeCode)->RangeMultiplier(4)->Range(16, 4096);

void BM_UnicyclicSweep(benchmark::State& state) {
  const FamilySpec family{.kind = FamilyKind::unicyclic, .min_n = 3,
                          .max_n = static_cast<std::size_t>(state.range(0))};
  SweepOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(family, all_theorems(), options).graphs_tested);
}
BENCHMARK(BM_UnicyclicSweep)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
