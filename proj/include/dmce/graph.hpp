#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmce {

using VertexId = std::uint32_t;

class SelfLoopError : public std::invalid_argument {
 public:
  explicit SelfLoopError(VertexId v);
};

class UnknownVertexError : public std::out_of_range {
 public:
  explicit UnknownVertexError(VertexId v);
};

// Undirected edge stored with u < v.
struct Edge {
  VertexId u{};
  VertexId v{};

  Edge() = default;
  // Canonicalizes the endpoint order; throws SelfLoopError if a == b.
  Edge(VertexId a, VertexId b);

  VertexId other(VertexId endpoint) const { return endpoint == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class AddOutcome { NewEdge, AlreadyPresent };

using VertexSet = std::vector<VertexId>;  // always sorted ascending

// Mutable undirected simple graph. All neighborhood queries follow the closed
// convention N(u) = adj(u) + {u}; open adjacency is exposed separately for
// kernels that need to iterate it.
class Graph {
 public:
  Graph() = default;

  // Registers v as a vertex. No-op if already present.
  void add_vertex(VertexId v);
  AddOutcome add_edge(Edge e);
  AddOutcome add_edge(VertexId a, VertexId b) { return add_edge(Edge{a, b}); }

  bool has_vertex(VertexId v) const { return v < present_.size() && present_[v]; }
  bool has_edge(VertexId a, VertexId b) const;
  // Membership in the closed neighborhood N(u).
  bool in_closed_neighborhood(VertexId u, VertexId w) const { return u == w || has_edge(u, w); }

  // Sorted open neighbors; throws UnknownVertexError.
  std::span<const VertexId> adjacent(VertexId u) const;
  std::size_t degree(VertexId u) const { return adjacent(u).size(); }

  VertexSet neighbors_closed(VertexId u) const;
  VertexSet common_neighbors_closed(VertexId u, VertexId v) const;

  // Sorted list of registered vertices.
  VertexSet vertices() const;
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_edges_; }
  // One past the largest registered id.
  std::size_t id_bound() const { return present_.size(); }

  std::vector<Edge> edges() const;

 private:
  void check_vertex(VertexId u) const;

  std::vector<VertexSet> adjacency_;
  std::vector<bool> present_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
};

// One parsed line of the edge-list format.
struct EdgeRecord {
  Edge edge;
  std::optional<double> weight;
};

struct EdgeList {
  std::vector<EdgeRecord> edges;
  // Ids given on single-id lines (isolated vertex declarations).
  std::vector<VertexId> vertices;

  Graph to_graph() const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: "u v" or "u v weight" per line, '#' starts a comment line.
// A line holding a single id declares an isolated vertex.
EdgeList parse_edge_list(std::istream& in);
EdgeList read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace dmce
