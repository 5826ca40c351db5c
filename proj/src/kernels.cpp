#include "dmce/kernels.hpp"

#include <algorithm>
#include <iterator>

#ifdef DMCE_HAVE_OPENMP
#include <omp.h>
#endif

namespace dmce {

bool is_maximal_in(const Graph& g, const Clique& c) {
  const auto& members = c.members();
  if (members.empty()) return false;
  VertexId pivot = *std::min_element(members.begin(), members.end(),
                                     [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  for (VertexId w : g.adjacent(pivot)) {
    if (c.contains(w)) continue;
    bool extends = std::all_of(members.begin(), members.end(),
                               [&](VertexId m) { return m == pivot || g.has_edge(m, w); });
    if (extends) return false;
  }
  return true;
}

std::vector<Clique> dedup_candidates(std::vector<Clique> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

std::vector<Clique> filter_maximal_serial(const Graph& g, std::span<const Clique> candidates) {
  std::vector<Clique> out;
  for (const auto& c : candidates) {
    if (is_maximal_in(g, c)) out.push_back(c);
  }
  return out;
}

std::vector<Clique> filter_maximal_parallel(const Graph& g, std::span<const Clique> candidates) {
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    keep[static_cast<std::size_t>(i)] = is_maximal_in(g, candidates[static_cast<std::size_t>(i)]) ? 1 : 0;
  }
  std::vector<Clique> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(candidates[i]);
  }
  return out;
}

std::vector<Clique> filter_maximal(const Graph& g, std::span<const Clique> candidates, const KernelOptions& opts) {
  if (opts.execution == Execution::Parallel && candidates.size() >= opts.parallel_threshold) {
    return filter_maximal_parallel(g, candidates);
  }
  return filter_maximal_serial(g, candidates);
}

namespace {

Clique pair_candidate(const Clique& a, const Clique& b, VertexId u, VertexId v) {
  VertexSet members;
  members.reserve(std::min(a.size(), b.size()) + 2);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  members.push_back(u);
  members.push_back(v);
  return Clique(std::move(members));
}

}  // namespace

std::vector<Clique> pairwise_candidates_serial(std::span<const Clique> side_u, std::span<const Clique> side_v,
                                               VertexId u, VertexId v) {
  std::vector<Clique> out;
  out.reserve(side_u.size() * side_v.size());
  for (const auto& a : side_u) {
    for (const auto& b : side_v) out.push_back(pair_candidate(a, b, u, v));
  }
  return out;
}

std::vector<Clique> pairwise_candidates_parallel(std::span<const Clique> side_u, std::span<const Clique> side_v,
                                                 VertexId u, VertexId v) {
  const std::size_t cols = side_v.size();
  const auto total = static_cast<std::ptrdiff_t>(side_u.size() * cols);
  std::vector<Clique> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out[idx] = pair_candidate(side_u[idx / cols], side_v[idx % cols], u, v);
  }
  return out;
}

int kernel_threads() {
#ifdef DMCE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dmce
