#include <benchmark/benchmark.h>

#include "gridnet/generators.hpp"
#include "gridnet/graph.hpp"
#include "gridnet/metrics.hpp"

namespace {

// Paper-scale topology: 400 substations, 774 lines.
const gridnet::Snapshot& grid_scale() {
  static const auto g = gridnet::make_gnm(400, 774, 99, 2019);
  return g;
}

void BM_BfsSingleSource(benchmark::State& state) {
  const auto& g = grid_scale();
  int source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gridnet::bfs_from(g, source));
    source = (source + 1) % g.node_count();
  }
}
BENCHMARK(BM_BfsSingleSource);

void BM_AllPairsDistances(benchmark::State& state) {
  const auto& g = grid_scale();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gridnet::all_pairs_distances(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AllPairsDistances)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Efficiency(benchmark::State& state) {
  const auto& g = grid_scale();
  for (auto _ : state) benchmark::DoNotOptimize(gridnet::efficiency(g));
}
BENCHMARK(BM_Efficiency)->Unit(benchmark::kMillisecond);

void BM_DetectCommunities(benchmark::State& state) {
  const auto& g = grid_scale();
  for (auto _ : state)
    benchmark::DoNotOptimize(gridnet::detect_communities(g, 1));
}
BENCHMARK(BM_DetectCommunities)->Unit(benchmark::kMillisecond);

}  // namespace
