#pragma once

#include <vector>

#include "dmce/clique.hpp"
#include "dmce/graph.hpp"

namespace dmce {

// From-scratch maximal clique enumeration (Bron-Kerbosch with pivoting).
// Isolated vertices come out as singletons. Result is in canonical order.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g);

// Every clique of size exactly k together with every maximal clique of size
// below k, in canonical order. Throws std::invalid_argument if k < 1.
std::vector<Clique> enumerate_maximal_k_cliques(const Graph& g, int k);

}  // namespace dmce
