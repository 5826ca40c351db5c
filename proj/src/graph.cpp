#include "dmce/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dmce {

SelfLoopError::SelfLoopError(VertexId v)
    : std::invalid_argument("self-loop on vertex " + std::to_string(v)) {}

UnknownVertexError::UnknownVertexError(VertexId v)
    : std::out_of_range("unknown vertex " + std::to_string(v)) {}

Edge::Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw SelfLoopError(a);
}

void Graph::add_vertex(VertexId v) {
  if (v >= present_.size()) {
    present_.resize(std::size_t{v} + 1, false);
    adjacency_.resize(std::size_t{v} + 1);
  }
  if (!present_[v]) {
    present_[v] = true;
    ++num_vertices_;
  }
}

AddOutcome Graph::add_edge(Edge e) {
  if (e.u == e.v) throw SelfLoopError(e.u);
  add_vertex(e.u);
  add_vertex(e.v);
  auto& au = adjacency_[e.u];
  auto it = std::lower_bound(au.begin(), au.end(), e.v);
  if (it != au.end() && *it == e.v) return AddOutcome::AlreadyPresent;
  au.insert(it, e.v);
  auto& av = adjacency_[e.v];
  av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
  ++num_edges_;
  return AddOutcome::NewEdge;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  // Search the shorter list.
  const auto& la = adjacency_[a];
  const auto& lb = adjacency_[b];
  if (la.size() <= lb.size()) return std::binary_search(la.begin(), la.end(), b);
  return std::binary_search(lb.begin(), lb.end(), a);
}

void Graph::check_vertex(VertexId u) const {
  if (!has_vertex(u)) throw UnknownVertexError(u);
}

std::span<const VertexId> Graph::adjacent(VertexId u) const {
  check_vertex(u);
  return adjacency_[u];
}

VertexSet Graph::neighbors_closed(VertexId u) const {
  check_vertex(u);
  const auto& adj = adjacency_[u];
  VertexSet out;
  out.reserve(adj.size() + 1);
  auto split = std::lower_bound(adj.begin(), adj.end(), u);
  out.insert(out.end(), adj.begin(), split);
  out.push_back(u);
  out.insert(out.end(), split, adj.end());
  return out;
}

VertexSet Graph::common_neighbors_closed(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  // Walk the smaller closed neighborhood and probe the other one.
  VertexId small = degree(u) <= degree(v) ? u : v;
  VertexId large = small == u ? v : u;
  VertexSet out;
  for (VertexId w : neighbors_closed(small)) {
    if (in_closed_neighborhood(large, w)) out.push_back(w);
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(num_vertices_);
  for (std::size_t i = 0; i < present_.size(); ++i) {
    if (present_[i]) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (v > u) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

Graph EdgeList::to_graph() const {
  Graph g;
  for (VertexId v : vertices) g.add_vertex(v);
  for (const auto& rec : edges) g.add_edge(rec.edge);
  return g;
}

namespace {

VertexId parse_vertex(std::string_view tok, std::size_t line_no) {
  VertexId value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(std::move(t));

    if (toks.size() == 1) {
      out.vertices.push_back(parse_vertex(toks[0], line_no));
      continue;
    }
    if (toks.size() > 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [weight]'");
    }
    VertexId a = parse_vertex(toks[0], line_no);
    VertexId b = parse_vertex(toks[1], line_no);
    if (a == b) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    EdgeRecord rec{Edge{a, b}, std::nullopt};
    if (toks.size() == 3) {
      try {
        std::size_t used = 0;
        rec.weight = std::stod(toks[2], &used);
        if (used != toks[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + toks[2] + "'");
      }
    }
    out.edges.push_back(rec);
  }
  return out;
}

EdgeList read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) out << v << '\n';
  }
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace dmce
