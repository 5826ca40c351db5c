#include "dmce/static_oracle.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace dmce {
namespace {

VertexSet intersect(const VertexSet& a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const VertexSet& a, std::span<const VertexId> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  std::vector<Clique> run() {
    if (g_.num_vertices() == 0) return {};
    VertexSet r;
    expand(r, g_.vertices(), {});
    return canonicalize(std::move(out_));
  }

 private:
  void expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) out_.emplace_back(r);
      return;
    }
    // Pivot: vertex of P or X with the most neighbors in P.
    VertexId pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const VertexSet* pool : {&p, &x}) {
      for (VertexId w : *pool) {
        std::size_t d = intersection_size(p, g_.adjacent(w));
        if (first || d > best || (d == best && w < pivot)) {
          pivot = w;
          best = d;
          first = false;
        }
      }
    }
    VertexSet branch;
    auto pivot_adj = g_.adjacent(pivot);
    std::set_difference(p.begin(), p.end(), pivot_adj.begin(), pivot_adj.end(), std::back_inserter(branch));
    for (VertexId v : branch) {
      auto adj = g_.adjacent(v);
      r.push_back(v);
      expand(r, intersect(p, adj), intersect(x, adj));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::vector<Clique> out_;
};

// All cliques of exactly `k` vertices, built in increasing id order.
void sized_cliques(const Graph& g, std::size_t k, VertexSet& r, const VertexSet& cand, std::vector<Clique>& out) {
  if (r.size() == k) {
    out.emplace_back(r);
    return;
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (r.size() + (cand.size() - i) < k) break;
    VertexId v = cand[i];
    VertexSet next;
    auto adj = g.adjacent(v);
    std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), adj.begin(), adj.end(),
                          std::back_inserter(next));
    r.push_back(v);
    sized_cliques(g, k, r, next, out);
    r.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_maximal_cliques(const Graph& g) { return BronKerbosch(g).run(); }

std::vector<Clique> enumerate_maximal_k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  auto bound = static_cast<std::size_t>(k);
  std::vector<Clique> out;
  for (auto& c : enumerate_maximal_cliques(g)) {
    if (c.size() < bound) out.push_back(std::move(c));
  }
  VertexSet r;
  sized_cliques(g, bound, r, g.vertices(), out);
  return canonicalize(std::move(out));
}

}  // namespace dmce
