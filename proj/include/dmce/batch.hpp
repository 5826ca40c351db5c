#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dmce/clique_index.hpp"
#include "dmce/insertion.hpp"

namespace dmce {

// Conservative: neither closed neighborhood of one edge's endpoints meets the
// other edge. Aggressive: only the generation side of each update must be
// untouched by the other edge.
enum class IndependenceMode { Conservative, Aggressive };

std::string_view to_string(IndependenceMode m);

struct BatchEdge {
  Edge edge;
  VertexId side{};  // generation side used under Aggressive

  friend bool operator==(const BatchEdge&, const BatchEdge&) = default;
};

struct IndependenceOptions {
  // Aggressive only: require the condition in both directions. The one-way
  // form (second edge's side untouched by the first) is kept for experiments.
  bool symmetric = true;
};

// Edges sharing an endpoint are never independent.
bool edges_independent(const Graph& g, const BatchEdge& first, const BatchEdge& second, IndependenceMode mode,
                       const IndependenceOptions& opts = {});

struct Schedule {
  std::vector<std::vector<BatchEdge>> rounds;
  IndependenceMode mode = IndependenceMode::Conservative;
  IndependenceOptions options;

  std::size_t num_edges() const;
};

// Greedy first-fit: each edge goes to the earliest round whose members it is
// independent of, judged against g plus all edges of earlier rounds, provided
// the placement keeps every later round valid. Sides come from choose_side on
// `ix` when given (a vertex the index does not know counts as one clique),
// else the smaller endpoint. Throws std::invalid_argument on a repeated edge
// or an edge already in g.
Schedule schedule_batch(const Graph& g, std::span<const Edge> batch, IndependenceMode mode,
                        const CliqueStore* ix = nullptr, const IndependenceOptions& opts = {});

// Every within-round pair satisfies the schedule's predicate against g plus
// the edges of earlier rounds.
bool schedule_is_valid(const Graph& g, const Schedule& s);

struct BatchOptions {
  Method method = Method::Proposed;
  // Parallel runs the updates of one round concurrently.
  KernelOptions kernels;
};

// Runs the rounds in order. Within a round all edges are added first, then
// every update is planned against that shared state (concurrently when
// requested) and the plans are committed in round order. Aggressive schedules
// pin each update to its scheduled side. Reports carry the round index.
std::vector<InsertionReport> apply_batch(Graph& g, MaximalCliqueIndex& ix, const Schedule& s,
                                         const BatchOptions& opts = {});
std::vector<InsertionReport> apply_batch(Graph& g, KCliqueIndex& ix, const Schedule& s,
                                         const BatchOptions& opts = {});

}  // namespace dmce
