#include <benchmark/benchmark.h>

#include "mmfvs/annotated.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/solver.hpp"
#include "mmfvs/twdp.hpp"

using namespace mmfvs;

// Sparse random graph, n = range(0), decision at k = range(1).
static void BM_Solve(benchmark::State& state) {
  const MultiGraph g = random_sparse(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 10 + 2, 7);
  SolveConfig cfg;
  cfg.k = static_cast<int>(state.range(1));
  long long nodes = 0;
  for (auto _ : state) {
    SolveResult r = solve(g, cfg);
    nodes = r.stats.nodes;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Solve)->ArgsProduct({{20, 40, 60}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

static void BM_SolveTw(benchmark::State& state) {
  const MultiGraph g = random_sparse(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  int width = 0;
  for (auto _ : state) {
    TwResult r = solve_tw(g, 0);
    width = r.stats.width;
    benchmark::DoNotOptimize(r);
  }
  state.counters["width"] = width;
}
BENCHMARK(BM_SolveTw)->ArgsProduct({{20, 40}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

// Colouring instance of a random graph on range(0) vertices.
static void BM_PathRestricted(benchmark::State& state) {
  const ColoringInstance ci = coloring_to_annotated(random_erdos_renyi(static_cast<int>(state.range(0)), 0.5, 3));
  long long nodes = 0;
  for (auto _ : state) {
    AnnotatedResult r = solve_path_restricted(ci.instance);
    nodes = r.stats.nodes;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_PathRestricted)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
