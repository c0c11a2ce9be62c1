#pragma once

#include <cstdint>
#include <string>

#include "orient/graph.hpp"
#include "orient/structural.hpp"

namespace orient {

/// Pinned 64-bit generator (splitmix) so corpora reproduce across platforms
/// and languages; never the platform default engine.
struct splitmix64 {
    uint64_t state;

    explicit splitmix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // bound > 0; modulo reduction, pinned for reproducibility
    uint64_t below(uint64_t bound) { return next() % bound; }
    int pick(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }
};

/// Deterministic generator request: identical spec + seed yields an identical
/// labeled graph. Kinds: cycle, complete, path, star (n vertices), grid (k*k
/// vertices), two_tree (n), hollowed_two_tree (n, hole), block_cactus (n),
/// paste_sep2 (n).
struct generator_spec {
    std::string kind;
    int n = 0;
    int hole = 4;  // hollowed_two_tree only
    uint64_t seed = 0;
};

graph generate(const generator_spec& spec);

// The random flavors, directly callable.
graph gen_two_tree(int n, uint64_t seed);
graph gen_hollowed_two_tree(int n, int hole_len, uint64_t seed);
graph gen_block_cactus(int n, uint64_t seed);
graph gen_paste_sep2(int n, uint64_t seed);

/// Replays a construction sequence into a labeled graph. With
/// enforce_a2_prime every A2 step must target an edge lying in at most one
/// induced cycle at attach time; violations and malformed step references
/// throw.
graph apply_steps(const build_sequence& seq, bool enforce_a2_prime);

}  // namespace orient
