#pragma once

#include <cstdint>

#include "orient/graph.hpp"

namespace orient {

/// Canonical form of a graph with n <= 11: the lexicographically largest
/// upper-triangle bit string over all vertex relabelings, packed with the
/// column-major bit order (0,1),(0,2),(1,2),(0,3),... also used by graph6.
/// Equal codes <=> isomorphic graphs.
uint64_t canonical_code(const graph& g);

/// Rebuilds the canonically labeled graph from its code.
graph graph_from_code(int n, uint64_t code);

/// All connected graphs on n vertices, one canonical representative per
/// isomorphism class, sorted by canonical code. Built-in for n <= 8.
std::vector<graph> enumerate_connected(int n);

}  // namespace orient
