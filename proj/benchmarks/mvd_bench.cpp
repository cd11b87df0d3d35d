#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "mvd/blocks.hpp"
#include "mvd/catalog.hpp"
#include "mvd/families.hpp"
#include "mvd/iso.hpp"
#include "mvd/solve.hpp"
#include "mvd/verify.hpp"

namespace {

// Chain of C6 blocks, each glued to the previous one at a single vertex.
mvd::Graph cycle_chain(std::size_t links) {
  const std::size_t n = 1 + 5 * links;
  mvd::Graph g(mvd::indexed_labels(n));
  mvd::Vertex hub = 0;
  for (std::size_t i = 0; i < links; ++i) {
    const mvd::Vertex first = 1 + 5 * i;
    mvd::Vertex prev = hub;
    for (mvd::Vertex v = first; v < first + 5; ++v) {
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, hub);
    hub = first + 2;
  }
  return g;
}

mvd::Graph shuffled(const mvd::Graph& g, unsigned seed) {
  std::vector<mvd::Vertex> perm(g.order());
  for (mvd::Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return mvd::reorder(g, perm);
}

}  // namespace

static void BM_Decompose(benchmark::State& state) {
  const auto g = cycle_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvd::decompose(g));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.order()));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_DecomposeLongPath(benchmark::State& state) {
  const auto g = mvd::path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvd::decompose(g));
}
BENCHMARK(BM_DecomposeLongPath)->Arg(10000);

static void BM_ExactCycle(benchmark::State& state) {
  const auto g = mvd::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvd::mvd_exact(g, mvd::ExactOptions{false}));
}
BENCHMARK(BM_ExactCycle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ExactTheta(benchmark::State& state) {
  const auto g = mvd::theta_graph("3,3,1");
  const mvd::ExactOptions options{state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(mvd::mvd_exact(g, options));
  state.SetLabel(state.range(0) ? "half-order start" : "full descent");
}
BENCHMARK(BM_ExactTheta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  const auto g = cycle_chain(static_cast<std::size_t>(state.range(0)));
  const auto r = mvd::mvd_via_blocks(g);
  for (auto _ : state) benchmark::DoNotOptimize(mvd::is_mvd_coloring(g, r.coloring));
}
BENCHMARK(BM_Verify)->Arg(2)->Arg(8)->Arg(32);

static void BM_ViaBlocks(benchmark::State& state) {
  const auto g = cycle_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvd::mvd_via_blocks(g));
}
BENCHMARK(BM_ViaBlocks)->Arg(2)->Arg(8)->Arg(32);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto base = mvd::generate_minimal_blocks(static_cast<std::size_t>(state.range(0)));
  std::vector<mvd::Graph> inputs;
  for (std::size_t i = 0; i < base.size(); ++i) inputs.push_back(shuffled(base[i], static_cast<unsigned>(i)));
  for (auto _ : state)
    for (const auto& g : inputs) benchmark::DoNotOptimize(mvd::canonical_form(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10, 2);

static void BM_FindIsomorphism(benchmark::State& state) {
  const auto g = mvd::theta_graph("3,2,2");
  const auto h = shuffled(g, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mvd::find_isomorphism(g, h));
}
BENCHMARK(BM_FindIsomorphism);

static void BM_GenerateMinimalBlocks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mvd::generate_minimal_blocks(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenerateMinimalBlocks)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mvd::build_catalog(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildCatalog)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
