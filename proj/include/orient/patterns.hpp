#pragma once

#include <optional>
#include <string>

#include "orient/graph.hpp"

namespace orient {

/// A named forbidden-structure graph.
struct pattern {
    std::string name;
    graph g;
};

/// Complement of the even cycle C_{2k}, k >= 3. Named "F3_<k>".
graph f3_graph(int k);
/// Complement of the disjoint union of K2 and the odd cycle C_{2k+1},
/// k >= 1. Named "F4_<k>". F4_1 is isomorphic to K2,3.
graph f4_graph(int k);

/// The fixed catalog: K4, K2_3, K2_3_plus, F1, F2, the family members F3_3,
/// F3_4, F4_1, F4_2, the sporadic graphs F5..F12, and the separability
/// patterns F13, F14, F15.
const std::vector<pattern>& builtin_patterns();

/// Lookup by stable name; throws on unknown names.
const pattern& pattern_by_name(const std::vector<pattern>& catalog, const std::string& name);
const pattern& builtin_pattern(const std::string& name);

/// Branch sets of a (induced) minor model, indexed by pattern vertex.
struct minor_model {
    std::vector<std::vector<int>> branch_sets;
};

enum class containment_mode { minor, induced };

/// Checks a model of h in g: branch sets keyed exactly by V(h), nonempty,
/// in range (violations throw), pairwise disjoint, each inducing a connected
/// subgraph, and with cross edges covering every h-edge (minor mode) or
/// matching h's adjacency exactly (induced mode).
bool verify_model(const graph& g, const graph& h, const minor_model& m,
                  containment_mode mode);

/// Backtracking search for a model of h in g; any returned model passes
/// verify_model and nullopt means no model exists. Host vertices are tried
/// in decreasing-degree order and pattern slots likewise, with incremental
/// adjacency pruning (induced mode) and a final connectivity check. Meant
/// for |V(h)| <= 8 and |V(g)| <= 16 or so.
std::optional<minor_model> find_containment(const graph& g, const graph& h,
                                            containment_mode mode);

}  // namespace orient
