#include "dmce/insertion.hpp"

#include <algorithm>

namespace dmce {

std::string_view to_string(Method m) { return m == Method::Proposed ? "proposed" : "existing"; }

std::optional<Method> parse_method(std::string_view name) {
  if (name == "proposed") return Method::Proposed;
  if (name == "existing") return Method::Existing;
  return std::nullopt;
}

VertexId choose_side(const CliqueStore& ix, VertexId u, VertexId v) {
  auto cu = ix.count_containing(u);
  auto cv = ix.count_containing(v);
  if (cu != cv) return cu < cv ? u : v;
  return std::min(u, v);
}

std::vector<Clique> generate_candidates_proposed(const Graph& g, const CliqueStore& ix, VertexId u, VertexId v,
                                                 VertexId side) {
  VertexId other = side == u ? v : u;
  std::vector<Clique> out;
  auto ids = ix.cliques_containing(side);
  out.reserve(ids.size());
  for (CliqueId id : ids) {
    VertexSet members;
    for (VertexId w : ix.at(id)) {
      if (g.in_closed_neighborhood(other, w)) members.push_back(w);
    }
    members.push_back(u);
    members.push_back(v);
    out.emplace_back(std::move(members));
  }
  return out;
}

namespace {

std::vector<Clique> materialize(const CliqueStore& ix, VertexId u) {
  std::vector<Clique> out;
  for (CliqueId id : ix.cliques_containing(u)) out.push_back(ix.at(id));
  return out;
}

}  // namespace

std::vector<Clique> generate_candidates_existing(const Graph&, const CliqueStore& ix, VertexId u, VertexId v,
                                                 const KernelOptions& opts) {
  auto side_u = materialize(ix, u);
  auto side_v = materialize(ix, v);
  if (opts.execution == Execution::Parallel && side_u.size() * side_v.size() >= opts.parallel_threshold) {
    return pairwise_candidates_parallel(side_u, side_v, u, v);
  }
  return pairwise_candidates_serial(side_u, side_v, u, v);
}

std::vector<CliqueId> remove_stale(const Graph& g_after, const CliqueStore& ix, VertexId u, VertexId v,
                                   std::size_t size_limit) {
  std::vector<CliqueId> out;
  for (auto [mine, other] : {std::pair{u, v}, std::pair{v, u}}) {
    for (CliqueId id : ix.cliques_containing(mine)) {
      const Clique& d = ix.at(id);
      if (d.size() >= size_limit) continue;
      bool absorbed = std::all_of(d.begin(), d.end(), [&](VertexId w) { return g_after.in_closed_neighborhood(other, w); });
      if (absorbed) out.push_back(id);
    }
  }
  return out;
}

void register_endpoints(Graph& g, CliqueStore& ix, Edge e) {
  std::vector<Clique> singletons;
  for (VertexId w : {e.u, e.v}) {
    if (!g.has_vertex(w)) {
      g.add_vertex(w);
      singletons.push_back(Clique{w});
    } else if (!ix.knows_vertex(w)) {
      throw std::logic_error("index does not cover vertex " + std::to_string(w));
    }
  }
  if (!singletons.empty()) ix.apply_delta(singletons, {});
}

InsertionPlan plan_insertion(const Graph& g_after, const MaximalCliqueIndex& ix, Edge e, Method m,
                             const InsertOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  InsertionPlan plan;
  auto& report = plan.report;
  report.edge = e;
  report.method = m;

  std::vector<Clique> candidates;
  if (m == Method::Proposed) {
    VertexId side = opts.side.value_or(choose_side(ix, e.u, e.v));
    if (!e.touches(side)) throw std::invalid_argument("generation side is not an endpoint");
    report.side = side;
    candidates = generate_candidates_proposed(g_after, ix, e.u, e.v, side);
  } else {
    candidates = generate_candidates_existing(g_after, ix, e.u, e.v, opts.kernels);
  }
  report.candidates_generated = candidates.size();
  candidates = dedup_candidates(std::move(candidates));
  report.candidates_after_dedup = candidates.size();

  plan.add = filter_maximal(g_after, candidates, opts.kernels);
  plan.remove = remove_stale(g_after, ix, e.u, e.v);
  for (CliqueId id : plan.remove) report.removed.push_back(ix.at(id));
  report.added = plan.add;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return plan;
}

InsertionReport commit_plan(CliqueStore& ix, InsertionPlan plan) {
  auto start = std::chrono::steady_clock::now();
  ix.apply_delta(plan.add, plan.remove);
  auto& report = plan.report;
  report.total_cliques = ix.size();
  report.elapsed += std::chrono::steady_clock::now() - start;
  return std::move(report);
}

InsertionReport insert_edge_update(Graph& g, MaximalCliqueIndex& ix, Edge e, Method m, const InsertOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  register_endpoints(g, ix, e);
  if (g.add_edge(e) == AddOutcome::AlreadyPresent) {
    InsertionReport report;
    report.edge = e;
    report.method = m;
    report.edge_was_present = true;
    report.total_cliques = ix.size();
    return report;
  }
  auto report = commit_plan(ix, plan_insertion(g, ix, e, m, opts));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace dmce
