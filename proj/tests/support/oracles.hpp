#pragma once

// Test-only reference code. Kept deliberately naive and independent of the
// library's enumeration paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmce/clique.hpp"
#include "dmce/graph.hpp"

namespace dmce::testing {

inline bool subset_is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

// Every vertex subset, filtered: cliques no single outside vertex extends.
// Only for |V| <= 15.
inline std::vector<Clique> naive_maximal_cliques(const Graph& g) {
  auto vs = g.vertices();
  if (vs.size() > 15) throw std::invalid_argument("naive oracle limited to 15 vertices");
  std::vector<Clique> out;
  for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask & (1u << i)) s.push_back(vs[i]);
    }
    if (!subset_is_clique(g, s)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < vs.size() && maximal; ++i) {
      if (mask & (1u << i)) continue;
      VertexSet grown = s;
      grown.push_back(vs[i]);
      std::sort(grown.begin(), grown.end());
      if (subset_is_clique(g, grown)) maximal = false;
    }
    if (maximal) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Size-k cliques plus maximal cliques below k, by subset filtering.
inline std::vector<Clique> naive_maximal_k_cliques(const Graph& g, int k) {
  auto vs = g.vertices();
  if (vs.size() > 15) throw std::invalid_argument("naive oracle limited to 15 vertices");
  std::vector<Clique> out;
  for (const auto& c : naive_maximal_cliques(g)) {
    if (c.size() < static_cast<std::size_t>(k)) out.push_back(c);
  }
  for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
    if (std::popcount(mask) != k) continue;
    VertexSet s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask & (1u << i)) s.push_back(vs[i]);
    }
    if (subset_is_clique(g, s)) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph edgeless(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
  return g;
}

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  Graph g = edgeless(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// G(n, p) edge set in a random order.
inline std::vector<Edge> random_edge_order(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

// Complement of the perfect matching {i, i+m} on 2m vertices.
inline Graph cocktail_party(std::size_t m) {
  Graph g = edgeless(2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) {
    for (std::size_t j = i + 1; j < 2 * m; ++j) {
      if (j != i + m) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return g;
}

inline std::size_t count_through(const std::vector<Clique>& cliques, VertexId v) {
  return static_cast<std::size_t>(std::count_if(cliques.begin(), cliques.end(), [&](const Clique& c) { return c.contains(v); }));
}

}  // namespace dmce::testing
