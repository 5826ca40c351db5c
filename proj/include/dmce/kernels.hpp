#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dmce/clique.hpp"
#include "dmce/graph.hpp"

namespace dmce {

enum class Execution { Serial, Parallel };

struct KernelOptions {
  Execution execution = Execution::Serial;
  // Below this many work items the parallel kernels fall back to serial.
  std::size_t parallel_threshold = 256;
};

// True iff no vertex outside c is adjacent to every member of c. c must be a
// clique of g. Scans the open neighbors of the lowest-degree member.
bool is_maximal_in(const Graph& g, const Clique& c);

// Sorts and removes duplicate member sets.
std::vector<Clique> dedup_candidates(std::vector<Clique> candidates);

// Candidates that pass is_maximal_in, in input order. The serial version is
// the reference the parallel one is tested against.
std::vector<Clique> filter_maximal_serial(const Graph& g, std::span<const Clique> candidates);
std::vector<Clique> filter_maximal_parallel(const Graph& g, std::span<const Clique> candidates);
std::vector<Clique> filter_maximal(const Graph& g, std::span<const Clique> candidates, const KernelOptions& opts);

// (a ∩ b) ∪ {u,v} for every pair of a-list and b-list entries, row-major in
// (a, b) order.
std::vector<Clique> pairwise_candidates_serial(std::span<const Clique> side_u, std::span<const Clique> side_v,
                                               VertexId u, VertexId v);
std::vector<Clique> pairwise_candidates_parallel(std::span<const Clique> side_u, std::span<const Clique> side_v,
                                                 VertexId u, VertexId v);

// Number of threads the parallel kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace dmce
