#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "dmce/clique_index.hpp"
#include "dmce/graph.hpp"
#include "dmce/kernels.hpp"

namespace dmce {

// Proposed: one candidate per maximal clique through one endpoint,
// (C_s ∩ N(other)) ∪ {u,v}. Existing: one candidate per pair of maximal
// cliques through u and v, (C_u ∩ C_v) ∪ {u,v}.
enum class Method { Proposed, Existing };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct InsertionReport {
  Edge edge;
  Method method = Method::Proposed;
  std::optional<VertexId> side;  // generation side, Proposed only
  std::size_t candidates_generated = 0;
  std::size_t candidates_after_dedup = 0;
  std::vector<Clique> added;
  std::vector<Clique> removed;
  std::chrono::nanoseconds elapsed{0};
  std::size_t total_cliques = 0;
  bool edge_was_present = false;

  // Context filled in by drivers; serialized as optional CSV columns.
  std::size_t step = 0;
  std::optional<int> k;
  std::optional<double> weight;
  std::optional<int> round;
};

struct InsertOptions {
  KernelOptions kernels;
  // Overrides choose_side for Proposed.
  std::optional<VertexId> side;
};

// Endpoint with fewer containing cliques; ties go to the smaller id.
VertexId choose_side(const CliqueStore& ix, VertexId u, VertexId v);

// Neighborhoods may be read before or after uv is added: the formula unions
// {u,v} explicitly, so the result is the same.
std::vector<Clique> generate_candidates_proposed(const Graph& g, const CliqueStore& ix, VertexId u, VertexId v,
                                                 VertexId side);
std::vector<Clique> generate_candidates_existing(const Graph& g, const CliqueStore& ix, VertexId u, VertexId v,
                                                 const KernelOptions& opts = {});

// Stored cliques that stop being maximal once uv is in g_after: those through
// one endpoint that fit inside the closed neighborhood of the other. Only
// entries smaller than `size_limit` are considered.
std::vector<CliqueId> remove_stale(const Graph& g_after, const CliqueStore& ix, VertexId u, VertexId v,
                                   std::size_t size_limit = SIZE_MAX);

// A computed but not yet applied update.
struct InsertionPlan {
  std::vector<Clique> add;
  std::vector<CliqueId> remove;
  InsertionReport report;
};

// Makes sure both endpoints are vertices of g and are covered by the index
// (a new vertex enters as a singleton).
void register_endpoints(Graph& g, CliqueStore& ix, Edge e);

// Plans the update for e, which must already be in g_after. Read-only on both
// arguments, so independent plans may be computed concurrently.
InsertionPlan plan_insertion(const Graph& g_after, const MaximalCliqueIndex& ix, Edge e, Method m,
                             const InsertOptions& opts = {});

// Applies a plan and completes its report.
InsertionReport commit_plan(CliqueStore& ix, InsertionPlan plan);

// Adds e to g and brings ix to the maximal clique enumeration of the new
// graph. Inserting an existing edge returns an empty report.
InsertionReport insert_edge_update(Graph& g, MaximalCliqueIndex& ix, Edge e, Method m,
                                   const InsertOptions& opts = {});

}  // namespace dmce
