#include <benchmark/benchmark.h>

#include "netctl/edge_control.hpp"
#include "netctl/generators.hpp"
#include "netctl/kalman.hpp"
#include "netctl/matching.hpp"
#include "netctl/node_control.hpp"

namespace {

using namespace netctl;

DirectedGraph er_graph(benchmark::State& state) {
  return generate(GeneratorSpec{GeneratorModel::er, static_cast<std::size_t>(state.range(0)),
                                static_cast<double>(state.range(1)), 3.0, 42});
}

void BM_MaximumMatching(benchmark::State& state) {
  const auto b = to_bipartite(er_graph(state));
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(b).size);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.edges.size()));
}
BENCHMARK(BM_MaximumMatching)->ArgsProduct({{1000, 10000, 100000}, {2, 8}});

void BM_LineDigraph(benchmark::State& state) {
  const auto g = er_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(to_line_digraph(g).graph.edge_count());
}
BENCHMARK(BM_LineDigraph)->ArgsProduct({{1000, 10000}, {2, 8}});

void BM_NodeControl(benchmark::State& state) {
  const auto g = er_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_node_control(g).n_d);
}
BENCHMARK(BM_NodeControl)->ArgsProduct({{1000, 10000, 100000}, {4}});

void BM_EdgeControl(benchmark::State& state) {
  const auto g = er_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_edge_control(g).m_d);
}
BENCHMARK(BM_EdgeControl)->ArgsProduct({{1000, 10000}, {4}});

void BM_ScaleFreeGenerator(benchmark::State& state) {
  GeneratorSpec spec{GeneratorModel::sf, static_cast<std::size_t>(state.range(0)), 4.0, 3.0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(spec).edge_count());
    ++spec.seed;
  }
}
BENCHMARK(BM_ScaleFreeGenerator)->Arg(1000)->Arg(100000);

void BM_RankTest(benchmark::State& state) {
  const auto g = er_graph(state);
  const auto drivers = analyze_node_control(g).driver_nodes;
  for (auto _ : state) benchmark::DoNotOptimize(structural_rank_test(g, drivers).full_rank);
}
BENCHMARK(BM_RankTest)->Args({10, 2})->Args({25, 2});

}  // namespace

BENCHMARK_MAIN();
