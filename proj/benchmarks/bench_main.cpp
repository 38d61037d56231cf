#include <benchmark/benchmark.h>

#include "sdraw/halfcircle.hpp"
#include "sdraw/matrix.hpp"
#include "sdraw/planarity.hpp"
#include "sdraw/random.hpp"
#include "sdraw/realizability.hpp"

using namespace sdraw;

namespace {

Graph random_graph(std::size_t n, double q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (rng.uniform() < q) g.add_edge(a, b);
  return g;
}

// Planar grid plus a few chords: sparse, usually near the planarity boundary.
Graph grid_with_chords(std::size_t side, std::size_t chords, std::uint64_t seed) {
  Graph g(side * side);
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * side + c); };
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < side) g.add_edge(id(r, c), id(r + 1, c));
    }
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < chords;) {
    const auto a = static_cast<VertexId>(rng.below(g.vertex_count()));
    const auto b = static_cast<VertexId>(rng.below(g.vertex_count()));
    if (a == b || g.adjacent(a, b)) continue;
    g.add_edge(a, b);
    ++i;
  }
  return g;
}

}  // namespace

static void BM_LeftRightPlanarity(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const Graph g = grid_with_chords(side, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.vertex_count()));
}
BENCHMARK(BM_LeftRightPlanarity)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_ExhaustiveEmbedding(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_planar_embedding(g));
}
BENCHMARK(BM_ExhaustiveEmbedding)->DenseRange(5, 9);

static void BM_C6Audit(benchmark::State& state) {
  const auto jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c6_local_thrackle_audit(jobs));
}
BENCHMARK(BM_C6Audit)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CountWeakCkk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto mode = state.range(2) ? ScanMode::kAllPairs : ScanMode::kSeparatedOnly;
  const auto d = sample_halfcircle_drawing(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_weak_ckk(d, k, mode));
}
BENCHMARK(BM_CountWeakCkk)
    ->ArgsProduct({{8, 10, 12}, {2, 3}, {0, 1}})
    ->ArgNames({"n", "k", "all_pairs"});

static void BM_ForbiddenDetector(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  const auto m = random_two_row_matrix(cols, cols, cols, 21);
  for (auto _ : state) benchmark::DoNotOptimize(contains_forbidden_submatrix(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForbiddenDetector)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_ForbiddenBruteForce(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  const auto m = random_two_row_matrix(cols, cols, cols, 21);
  for (auto _ : state) benchmark::DoNotOptimize(contains_forbidden_submatrix_bruteforce(m));
}
BENCHMARK(BM_ForbiddenBruteForce)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK_MAIN();
