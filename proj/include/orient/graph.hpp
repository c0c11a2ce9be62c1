#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orient {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable after construction; all operations below are pure.
struct graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool operator==(const graph&) const = default;
};

/// Builds a normalized graph from an edge list. Duplicate and reversed
/// duplicate pairs collapse; an out-of-range index or a self-loop throws.
graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Edges as {u,v} pairs with u < v, sorted lexicographically. This is the
/// canonical edge order used everywhere an edge index appears.
std::vector<std::pair<int, int>> edge_list(const graph& g);

int edge_count(const graph& g);

graph complement_graph(const graph& g);

/// Contracts edge {u,v}; the merged vertex keeps the smaller index and the
/// larger index is removed (vertices above it shift down by one).
graph contract_edge(const graph& g, int u, int v);

/// Induced subgraph on s, reindexed to 0..|s|-1 preserving relative order.
graph induced_subgraph(const graph& g, const std::vector<int>& s);

/// Pastes g2 onto g1 along the given cliques: clique2[i] is identified with
/// clique1[i]; remaining g2 vertices are appended after g1's in increasing
/// order. Both lists must induce complete subgraphs of equal size.
graph paste(const graph& g1, const std::vector<int>& clique1,
            const graph& g2, const std::vector<int>& clique2);

bool is_connected(const graph& g);
std::vector<std::vector<int>> components(const graph& g);
bool is_tree(const graph& g);
bool is_complete(const graph& g);
/// True iff g is a cycle graph C_n, n >= 3.
bool is_cycle_graph(const graph& g);
/// True iff all vertices in s are pairwise adjacent in g.
bool is_clique(const graph& g, const std::vector<int>& s);

/// Per-vertex adjacency bitmasks; requires n <= 32.
std::vector<uint32_t> adjacency_masks(const graph& g);

// Convenience constructors used all over the tests and generators.
graph cycle_graph(int n);
graph complete_graph(int n);
graph path_graph(int n);
graph star_graph(int n);               // K_{1,n-1}, center 0
graph complete_bipartite(int a, int b); // part A = 0..a-1
graph grid_graph(int k);               // k*k vertices, row-major

}  // namespace orient
