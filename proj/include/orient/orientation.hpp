#pragma once

#include "orient/graph.hpp"

namespace orient {

/// An orientation of every edge of a host graph. dir is indexed by the
/// canonical edge order of edge_list(host); dir[e] == true orients edge
/// {u,v} (u < v) as u -> v.
struct orientation {
    graph host;
    std::vector<char> dir;

    bool operator==(const orientation&) const = default;
};

/// Directed arcs (tail, head), sorted by the canonical edge order.
std::vector<std::pair<int, int>> arcs(const orientation& d);

/// Out-neighborhoods N+(v) for every vertex, each sorted.
std::vector<std::vector<int>> out_neighbors(const orientation& d);

/// True iff every out-neighborhood is a clique of the host.
bool is_one_perfect(const orientation& d);

/// Vertices of out-degree zero, sorted.
std::vector<int> sinks(const orientation& d);

/// For a tree host: true iff the orientation is an in-tree (every vertex has
/// a unique directed path to a single root). Throws when the host is not a
/// tree.
bool is_in_tree(const orientation& d);

/// Builds an orientation from explicit arcs; every host edge must appear
/// exactly once (in either direction).
orientation orientation_from_arcs(const graph& host,
                                  const std::vector<std::pair<int, int>>& arc_list);

}  // namespace orient
