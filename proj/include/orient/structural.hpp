#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "orient/classes.hpp"
#include "orient/decompose.hpp"
#include "orient/orientation.hpp"
#include "orient/patterns.hpp"

namespace orient {

/// Thrown when an input is outside a recognizer's class (distinct from a
/// reject: such graphs must be routed to the 2-SAT oracle by the caller).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class block_label { two_tree_like, hollowed, other };

/// Labels a biconnected graph with >= 2 vertices. K2 and 2-trees are
/// two_tree_like; hollowed 2-trees are hollowed; anything else is other.
block_label classify_block(const graph& b);

/// Acceptance proof (an orientation) or rejection proof (a named forbidden
/// pattern with an induced-minor model); never a bare boolean. Rooted
/// rejections of hollowed 2-trees carry no witness: those graphs contain no
/// forbidden pattern, they merely admit only sink-free orientations.
struct certificate {
    bool accepted = false;
    std::optional<orientation> orient;
    std::optional<std::pair<std::string, minor_model>> witness;
    std::string reason;
};

enum class recognize_mode { k4_minor_free, outerplanar };

/// Biconnected k4-minor-free case: accepts exactly K1, 2-trees, and hollowed
/// 2-trees; accept orientations with >= 3 vertices are sink-free; rejects
/// carry a K2,3 or F1 induced-minor model.
certificate recognize_biconnected(const graph& g);

/// Rooted variant: accepts exactly K1 and 2-trees, with an orientation whose
/// unique sink is v. The verdict does not depend on v.
certificate recognize_biconnected_rooted(const graph& g, int v);

/// Orients a connected chordal graph along an elimination ordering starting
/// at v: 1-perfect with unique sink v.
orientation orient_chordal_with_sink(const graph& g, int v);

/// Sink-free 1-perfect orientation of a 2-connected 2-tree or a hollowed
/// 2-tree: the base cycle (or base triangle) is oriented cyclically and every
/// re-attached simplicial vertex points away from itself.
orientation orient_sink_free(const graph& g);

/// Main recognizer (Theorems for the k4-minor-free and outerplanar classes):
/// per connected component, accept iff the component is K1 or every block is
/// a 2-tree except at most one hollowed 2-tree. Accepts carry a combined
/// orientation; rejects carry the first induced-minor model found among
/// K2,3, F1, F2. Throws precondition_error when g is outside the mode's
/// class.
certificate recognize(const graph& g, recognize_mode mode);

/// Orientation for a connected accepted graph: the block tree is rooted at
/// the unique non-chordal block if present (else the lowest-index block),
/// the root block is oriented sink-free (or with a sink at its minimum
/// vertex when chordal), and every other block is oriented with its sink at
/// the cut vertex toward the root.
orientation build_orientation(const graph& g);

/// Block-cactus corollary: accept iff at most one block is a cycle of length
/// at least four.
certificate recognize_block_cactus(const graph& g);

/// Construction sequence from K1 or a cycle by attaching simplicial vertices
/// of degree 1 (A1) or degree 2 (A2). Labels are original: replaying
/// reconstructs the graph exactly.
struct build_step {
    bool a2 = false;  // false: A1 (attach to vertex a); true: A2 (attach to edge {a,b})
    int v = -1;
    int a = -1;
    int b = -1;
};

struct build_sequence {
    int n = 0;                 // vertex count of the full graph
    std::vector<int> base;     // single vertex (K1) or a cycle in cyclic order
    std::vector<build_step> steps;
};

/// Reverse-engineers a construction sequence by peeling degree-1 and
/// simplicial degree-2 vertices; some sequence is returned iff recognize
/// accepts. In outerplanar mode every A2 step is verified to target an edge
/// lying in at most one induced cycle at attach time (which Theorem 6.1
/// guarantees). Requires connected input in the mode's class.
std::optional<build_sequence> find_build_sequence(const graph& g, recognize_mode mode);

/// Number of chordless cycles through the edge {a,b}.
int induced_cycles_through_edge(const graph& g, int a, int b);

}  // namespace orient
