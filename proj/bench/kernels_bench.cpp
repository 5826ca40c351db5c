#include <benchmark/benchmark.h>

#include <random>

#include "dmce/batch.hpp"
#include "dmce/filtration.hpp"
#include "dmce/insertion.hpp"
#include "dmce/kernels.hpp"
#include "dmce/static_oracle.hpp"
#include "support/oracles.hpp"

namespace {

using namespace dmce;

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g = testing::edgeless(n);
  for (Edge e : testing::random_edge_order(n, p, rng)) g.add_edge(e);
  return g;
}

// All 3- and 4-cliques of a random graph: a mix of maximal and extendable sets.
const std::pair<Graph, std::vector<Clique>>& filter_fixture() {
  static const auto fixture = [] {
    Graph g = random_graph(300, 0.12, 1);
    std::vector<Clique> cs;
    for (int k : {3, 4}) {
      for (auto& c : enumerate_maximal_k_cliques(g, k)) {
        if (c.size() == static_cast<std::size_t>(k)) cs.push_back(std::move(c));
      }
    }
    return std::pair{std::move(g), std::move(cs)};
  }();
  return fixture;
}

void BM_FilterMaximalSerial(benchmark::State& state) {
  const auto& [g, cs] = filter_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(filter_maximal_serial(g, cs));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cs.size()));
}
BENCHMARK(BM_FilterMaximalSerial)->Unit(benchmark::kMillisecond);

void BM_FilterMaximalParallel(benchmark::State& state) {
  const auto& [g, cs] = filter_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(filter_maximal_parallel(g, cs));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cs.size()));
  state.counters["threads"] = kernel_threads();
}
BENCHMARK(BM_FilterMaximalParallel)->Unit(benchmark::kMillisecond);

std::pair<std::vector<Clique>, std::vector<Clique>> cocktail_sides(std::size_t m) {
  Graph g = testing::cocktail_party(m);
  auto ix = MaximalCliqueIndex::bootstrap(g);
  std::vector<Clique> a, b;
  for (CliqueId id : ix.cliques_containing(0)) a.push_back(ix.at(id));
  for (CliqueId id : ix.cliques_containing(static_cast<VertexId>(m))) b.push_back(ix.at(id));
  return {a, b};
}

void BM_PairwiseSerial(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto [a, b] = cocktail_sides(m);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_candidates_serial(a, b, 0, static_cast<VertexId>(m)));
}
BENCHMARK(BM_PairwiseSerial)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);

void BM_PairwiseParallel(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto [a, b] = cocktail_sides(m);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_candidates_parallel(a, b, 0, static_cast<VertexId>(m)));
}
BENCHMARK(BM_PairwiseParallel)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);

// One insertion of a matching edge into the cocktail-party graph: the
// proposed method generates 2^(m-1) candidates, the existing one 4^(m-1).
template <Method M>
void BM_CocktailInsert(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Graph base = testing::cocktail_party(m);
  const auto base_ix = MaximalCliqueIndex::bootstrap(base);
  std::size_t candidates = 0;
  for (auto _ : state) {
    state.PauseTiming();
    Graph g = base;
    auto ix = base_ix;
    state.ResumeTiming();
    candidates = insert_edge_update(g, ix, Edge{0, static_cast<VertexId>(m)}, M).candidates_generated;
  }
  state.counters["candidates"] = static_cast<double>(candidates);
}
BENCHMARK(BM_CocktailInsert<Method::Proposed>)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CocktailInsert<Method::Existing>)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);

template <Method M>
void BM_Filtration(benchmark::State& state) {
  auto stream = build_edge_stream(random_point_cloud(static_cast<std::size_t>(state.range(0)), 2, 11));
  FiltrationOptions opts;
  opts.method = M;
  for (auto _ : state) benchmark::DoNotOptimize(run_filtration(stream, opts).final_enumeration.size());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * stream.entries.size()));
}
BENCHMARK(BM_Filtration<Method::Proposed>)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Filtration<Method::Existing>)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

// Equal-weight batches from an integer grid, applied round by round.
void BM_GridFiltrationBatched(benchmark::State& state) {
  std::vector<std::vector<double>> pts;
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) pts.push_back({double(x), double(y)});
  }
  auto stream = build_edge_stream(PointCloud(pts));
  FiltrationOptions opts;
  if (state.range(0) > 0) {
    opts.parallel = IndependenceMode::Conservative;
    opts.kernels.execution = Execution::Parallel;
  }
  for (auto _ : state) benchmark::DoNotOptimize(run_filtration(stream, opts).reports.size());
  state.SetLabel(state.range(0) > 0 ? "conservative batches" : "sequential");
}
BENCHMARK(BM_GridFiltrationBatched)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
