#include "dmce/kclique.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmce {

std::vector<Clique> k_generate_candidates(const Graph& g, const KCliqueIndex& ix, VertexId u, VertexId v,
                                          VertexId side) {
  return generate_candidates_proposed(g, ix, u, v, side);
}

std::vector<Clique> k_expand_oversized(const Clique& c, int k, VertexId u, VertexId v) {
  if (k < 1 || c.size() != static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("oversized candidate must have k+1 members");
  }
  if (!c.contains(u) || !c.contains(v)) throw std::invalid_argument("oversized candidate must contain both endpoints");
  std::vector<Clique> out;
  for (VertexId drop : c) {
    if (drop == u || drop == v) continue;
    VertexSet members;
    members.reserve(c.size() - 1);
    std::copy_if(c.begin(), c.end(), std::back_inserter(members), [&](VertexId w) { return w != drop; });
    out.emplace_back(std::move(members));
  }
  return out;
}

InsertionPlan plan_k_insertion(const Graph& g_after, const KCliqueIndex& ix, Edge e, Method m,
                               const InsertOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  const auto k = static_cast<std::size_t>(ix.k());
  InsertionPlan plan;
  auto& report = plan.report;
  report.edge = e;
  report.method = m;
  report.k = ix.k();

  std::vector<Clique> candidates;
  if (m == Method::Proposed) {
    VertexId side = opts.side.value_or(choose_side(ix, e.u, e.v));
    if (!e.touches(side)) throw std::invalid_argument("generation side is not an endpoint");
    report.side = side;
    candidates = k_generate_candidates(g_after, ix, e.u, e.v, side);
  } else {
    candidates = generate_candidates_existing(g_after, ix, e.u, e.v, opts.kernels);
  }
  report.candidates_generated = candidates.size();
  candidates = dedup_candidates(std::move(candidates));
  report.candidates_after_dedup = candidates.size();

  std::vector<Clique> undersized;
  std::vector<Clique> accepted;
  for (auto& c : candidates) {
    if (c.size() < k) {
      undersized.push_back(std::move(c));
    } else if (c.size() == k) {
      accepted.push_back(std::move(c));
    } else if (c.size() == k + 1) {
      for (auto& sub : k_expand_oversized(c, ix.k(), e.u, e.v)) accepted.push_back(std::move(sub));
    } else {
      throw std::logic_error("k-clique candidate exceeds k+1 members: {" + to_string(c) + "}");
    }
  }
  for (auto& c : filter_maximal(g_after, undersized, opts.kernels)) accepted.push_back(std::move(c));

  accepted = dedup_candidates(std::move(accepted));
  std::erase_if(accepted, [&](const Clique& c) { return ix.find(c).has_value(); });
  plan.add = std::move(accepted);

  // Size-k entries stay size-k cliques, so only smaller ones can go stale.
  plan.remove = remove_stale(g_after, ix, e.u, e.v, k);
  for (CliqueId id : plan.remove) report.removed.push_back(ix.at(id));
  report.added = plan.add;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return plan;
}

InsertionReport k_insert_edge_update(Graph& g, KCliqueIndex& ix, Edge e, Method m, const InsertOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  register_endpoints(g, ix, e);
  if (g.add_edge(e) == AddOutcome::AlreadyPresent) {
    InsertionReport report;
    report.edge = e;
    report.method = m;
    report.k = ix.k();
    report.edge_was_present = true;
    report.total_cliques = ix.size();
    return report;
  }
  auto report = commit_plan(ix, plan_k_insertion(g, ix, e, m, opts));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace dmce
