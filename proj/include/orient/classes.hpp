#pragma once

#include <array>
#include <optional>

#include "orient/graph.hpp"

namespace orient {

/// A vertex ordering. For is_chordal the order is a perfect elimination
/// ordering: every vertex's later neighbors form a clique. peo_starting_at
/// returns the reverse convention (earlier neighbors form a clique) so that
/// its first vertex can serve as the sink of a 1-perfect orientation.
struct elimination_ordering {
    std::vector<int> order;
};

/// True iff each vertex's later neighbors in `order` form a clique.
bool is_peo(const graph& g, const std::vector<int>& order);

/// Maximum cardinality search + verification. Some ordering iff chordal.
std::optional<elimination_ordering> is_chordal(const graph& g);

/// For connected chordal g: an ordering starting at v whose reverse is a
/// perfect elimination ordering (equivalently, every vertex's earlier
/// neighbors form a clique). Built by deleting simplicial vertices other
/// than v until only v remains. Throws on non-chordal input.
elimination_ordering peo_starting_at(const graph& g, int v);

/// Record of a greedy simplicial-degree-2 reduction. Replaying the removals
/// in reverse on top of the residue reconstructs the input graph.
struct reduction_trace {
    std::vector<std::array<int, 3>> removed;        // (vertex, neighbor, neighbor)
    std::vector<int> residue_vertices;              // original labels, sorted
    std::vector<std::pair<int, int>> residue_edges; // original labels
};

/// Rebuilds the graph a trace was taken from (n = original vertex count).
graph replay_trace(int n, const reduction_trace& t);

/// Reduction by removing degree-2 vertices with adjacent neighbors; succeeds
/// iff the residue is K2. K1 is not a 2-tree.
std::optional<reduction_trace> is_2tree(const graph& g);

/// Same reduction; succeeds iff the residue is a cycle of length >= 4.
std::optional<reduction_trace> is_hollowed_2tree(const graph& g);

/// As is_2tree / is_hollowed_2tree but removing eligible vertices in the
/// given preference order instead of lowest-index first (used to validate
/// order independence of the greedy reduction).
std::optional<reduction_trace> is_2tree_ordered(const graph& g,
                                                const std::vector<int>& preference);
std::optional<reduction_trace> is_hollowed_2tree_ordered(const graph& g,
                                                         const std::vector<int>& preference);

/// Series-parallel style reduction: delete isolated and degree-1 vertices,
/// replace degree-2 vertices by an edge between their neighbors (collapsing
/// parallels). True iff the reduction empties the graph.
bool is_k4_minor_free(const graph& g);

/// True iff none of K4, K2,3, K2,3+ is an induced minor (containment-engine
/// based; meant for n <= 16).
bool is_outerplanar(const graph& g);

/// True iff every block induces a cycle or a complete graph. Throws on
/// disconnected input.
bool is_block_cactus(const graph& g);

/// True iff every non-adjacent vertex pair in a common component is
/// separated by some set of at most two other vertices. Brute-force over
/// candidate separators.
bool separability_at_most_2(const graph& g);

/// True iff g contains four pairwise adjacent vertices.
bool has_k4_clique(const graph& g);

/// True iff g has no 4-clique and separability at most 2.
bool is_cyclically_orientable(const graph& g);

}  // namespace orient
