#include "orient/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace orient {

namespace {

// Backtracking maximization of the packed adjacency bit string. Placing a
// vertex at position j fixes the j bits pairing it with positions 0..j-1, so
// prefixes are comparable level by level: a block smaller than the best known
// prunes, a larger one overwrites the best (its suffix resets to zero and is
// rebuilt by the continuing recursion).
struct canon_search {
    int n;
    const std::vector<uint32_t>& adjm;
    std::vector<uint32_t> best;      // best[j] = j-bit block at position j
    std::vector<int> placed;         // placed[j] = original vertex at position j
    std::vector<char> used;

    canon_search(int n, const std::vector<uint32_t>& adjm)
        : n(n), adjm(adjm), best(n, 0), placed(n, -1), used(n, 0) {}

    void run(int j) {
        if (j == n) return;
        for (int u = 0; u < n; ++u) {
            if (used[u]) continue;
            uint32_t block = 0;
            for (int i = 0; i < j; ++i)
                block |= ((adjm[u] >> placed[i]) & 1u) << (j - 1 - i);
            if (block < best[j]) continue;
            if (block > best[j]) {
                best[j] = block;
                for (int k = j + 1; k < n; ++k) best[k] = 0;
            }
            placed[j] = u;
            used[u] = 1;
            run(j + 1);
            used[u] = 0;
            placed[j] = -1;
        }
    }
};

}  // namespace

uint64_t canonical_code(const graph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical_code: n > 11");
    if (g.n <= 1) return 0;
    auto adjm = adjacency_masks(g);
    canon_search s(g.n, adjm);
    s.run(0);
    uint64_t code = 0;
    for (int j = 1; j < g.n; ++j) code = (code << j) | s.best[j];
    return code;
}

graph graph_from_code(int n, uint64_t code) {
    std::vector<std::pair<int, int>> edges;
    int total = n * (n - 1) / 2;
    int bit = total;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --bit;
            if (code >> bit & 1) edges.emplace_back(i, j);
        }
    return build_graph(n, edges);
}

std::vector<graph> enumerate_connected(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_connected: built-in range is 1..8");
    std::vector<graph> level{build_graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<uint64_t> seen;
        std::vector<uint64_t> codes;
        for (const auto& base : level) {
            // every connected graph arises by attaching its last vertex (some
            // non-cut vertex) to a connected base, so nonempty masks suffice
            for (uint32_t mask = 1; mask < (uint32_t{1} << (size - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = edge_list(base);
                for (int v = 0; v < size - 1; ++v)
                    if (mask >> v & 1) edges.emplace_back(v, size - 1);
                uint64_t code = canonical_code(build_graph(size, edges));
                if (seen.insert(code).second) codes.push_back(code);
            }
        }
        std::sort(codes.begin(), codes.end());
        level.clear();
        for (uint64_t c : codes) level.push_back(graph_from_code(size, c));
    }
    return level;
}

}  // namespace orient
