#pragma once

#include "orient/graph.hpp"

namespace orient {

/// Blocks (maximal biconnected subgraphs), cut vertices, and the block tree
/// of a connected graph. tree_edges pairs a block index with a cut vertex it
/// contains; for connected input these edges form a tree on blocks + cuts.
struct block_decomposition {
    std::vector<std::vector<int>> blocks;        // sorted vertex sets, DFS discovery order
    std::vector<int> cut_vertices;               // sorted
    std::vector<std::pair<int, int>> tree_edges; // (block index, cut vertex)
};

/// Lowpoint DFS block decomposition. Throws on disconnected input.
block_decomposition blocks_and_cut_vertices(const graph& g);

/// Orientation of a tree with every arc pointing toward the root.
struct tree_orientation {
    int root = 0;
    std::vector<int> parent;  // parent[root] == -1
};

/// Throws if t is not a tree or root is out of range.
tree_orientation rooted_tree_orientation(const graph& t, int root);

/// All chordless cycles of length >= 3, one per cycle up to rotation and
/// reflection. Each cycle starts at its minimum vertex with the smaller of
/// the two possible second vertices. Exponential in the worst case; meant
/// for small graphs.
std::vector<std::vector<int>> chordless_cycles(const graph& g);

/// Chordless cycles of length >= 4 (the holes of g).
std::vector<std::vector<int>> holes(const graph& g);

}  // namespace orient
