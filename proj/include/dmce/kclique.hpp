#pragma once

#include <vector>

#include "dmce/clique_index.hpp"
#include "dmce/insertion.hpp"

namespace dmce {

// One candidate (C_s ∩ N(other)) ∪ {u,v} per stored k-clique C_s through
// `side`. Every candidate has at most k+1 members.
std::vector<Clique> k_generate_candidates(const Graph& g, const KCliqueIndex& ix, VertexId u, VertexId v,
                                          VertexId side);

// The size-k subsets of a (k+1)-member candidate that keep both u and v.
// Throws std::invalid_argument unless |c| = k+1 and u, v ∈ c.
std::vector<Clique> k_expand_oversized(const Clique& c, int k, VertexId u, VertexId v);

// Plans the k-bounded update for e, which must already be in g_after.
InsertionPlan plan_k_insertion(const Graph& g_after, const KCliqueIndex& ix, Edge e, Method m,
                               const InsertOptions& opts = {});

// Adds e to g and brings ix to the maximal k-clique enumeration of the new
// graph. The report carries k.
InsertionReport k_insert_edge_update(Graph& g, KCliqueIndex& ix, Edge e, Method m = Method::Proposed,
                                     const InsertOptions& opts = {});

}  // namespace dmce
