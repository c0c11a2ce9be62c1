#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "orient/orientation.hpp"

namespace orient {

/// Exhaustive search over all edge orientations with incremental out-clique
/// pruning. Edges are tried in canonical order, low -> high direction first,
/// so "first" results are reproducible. Meant for |E| <= 20 or so.
uint64_t count_one_perfect(const graph& g, std::optional<int> forced_sink = {});
std::vector<orientation> collect_one_perfect(const graph& g,
                                             std::optional<int> forced_sink = {});
std::optional<orientation> first_one_perfect(const graph& g,
                                             std::optional<int> forced_sink = {});

/// Callback variant; return false from the callback to stop the search.
void enumerate_one_perfect(const graph& g, std::optional<int> forced_sink,
                           const std::function<bool(const orientation&)>& visit);

/// A 2-SAT instance over one variable per edge (canonical edge order);
/// variable e true orients edge {u,v} (u < v) as u -> v. Literals are encoded
/// as 2*var for the positive and 2*var+1 for the negated literal. Unit
/// clauses are stored with both literals equal.
struct two_sat_instance {
    int num_vars = 0;
    std::vector<std::pair<int, int>> clauses;
};

/// Clauses forbidding any vertex from having two non-adjacent out-neighbors;
/// with a forced sink s, unit clauses orienting every edge at s into s.
two_sat_instance build_one_perfect_instance(const graph& g,
                                            std::optional<int> forced_sink = {});

/// Implication-graph SCC solver. Returns a satisfying assignment or nullopt.
/// Deterministic: Tarjan numbers components sinks-first and a variable is set
/// true exactly when its positive literal lies in the smaller-numbered
/// component (the one later in topological order).
std::optional<std::vector<char>> solve_two_sat(const two_sat_instance& inst);

/// Polynomial recognizer for 1-perfect orientability; the returned witness
/// orientation always verifies under is_one_perfect.
std::optional<orientation> is_1po_2sat(const graph& g,
                                       std::optional<int> forced_sink = {});

/// True iff g has an orientation in which every chordless cycle is oriented
/// cyclically. Backtracking over edge directions; once one edge of a
/// chordless cycle is fixed the only cyclic completion is forced, so
/// conflicting cycles prune immediately. Meant for n <= 10.
bool cyclic_orientation_exists(const graph& g);

}  // namespace orient
