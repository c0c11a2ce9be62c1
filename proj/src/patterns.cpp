#include "orient/patterns.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace orient {

graph f3_graph(int k) {
    if (k < 3) throw std::invalid_argument("f3_graph: k < 3");
    return complement_graph(cycle_graph(2 * k));
}

graph f4_graph(int k) {
    if (k < 1) throw std::invalid_argument("f4_graph: k < 1");
    // K2 on {0,1}, odd cycle on {2..2k+2}, complemented.
    std::vector<std::pair<int, int>> e{{0, 1}};
    int c = 2 * k + 1;
    for (int i = 0; i < c; ++i) e.emplace_back(2 + i, 2 + (i + 1) % c);
    return complement_graph(build_graph(c + 2, e));
}

namespace {

std::vector<pattern> make_builtin_patterns() {
    std::vector<pattern> cat;
    cat.push_back({"K4", complete_graph(4)});
    cat.push_back({"K2_3", complete_bipartite(2, 3)});
    // K2,3 plus the edge between the two degree-3 vertices.
    cat.push_back({"K2_3_plus",
                   build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})});
    // Two 4-cycles sharing the edge {0,1}.
    cat.push_back({"F1",
                   build_graph(6, {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}})});
    // Two 4-cycles sharing the vertex 0.
    cat.push_back({"F2", build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                         {0, 4}, {4, 5}, {5, 6}, {6, 0}})});
    cat.push_back({"F3_3", f3_graph(3)});
    cat.push_back({"F3_4", f3_graph(4)});
    cat.push_back({"F4_1", f4_graph(1)});
    cat.push_back({"F4_2", f4_graph(2)});
    // F5..F12: sporadic minimal non-1-perfectly-orientable graphs beyond the
    // families above, the eight smallest by (order, size, canonical form).
    // Each is required by the acceptance suite to fail the 2-SAT recognizer.
    cat.push_back({"F5", build_graph(7, {{0, 5}, {0, 6}, {1, 2}, {1, 4}, {1, 5},
                                         {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}})});
    cat.push_back({"F6", build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {0, 7},
                                         {1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 5},
                                         {2, 7}, {4, 6}, {4, 7}, {5, 7}})});
    cat.push_back({"F7", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                         {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 7},
                                         {1, 8}, {2, 5}, {2, 7}, {3, 5}, {4, 7},
                                         {6, 8}})});
    cat.push_back({"F8", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                         {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                         {1, 7}, {2, 3}, {2, 4}, {2, 6}, {2, 7},
                                         {2, 8}, {3, 8}, {4, 8}, {5, 6}, {5, 7}})});
    cat.push_back({"F9", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                         {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
                                         {1, 5}, {1, 8}, {2, 3}, {2, 4}, {2, 6},
                                         {3, 5}, {4, 6}, {4, 8}, {5, 6}, {5, 7},
                                         {5, 8}, {6, 7}, {6, 8}, {7, 8}})});
    cat.push_back({"F10", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                          {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
                                          {1, 5}, {1, 8}, {2, 3}, {2, 4}, {2, 6},
                                          {2, 8}, {3, 5}, {4, 6}, {5, 6}, {5, 7},
                                          {5, 8}, {6, 7}, {6, 8}, {7, 8}})});
    cat.push_back({"F11", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                          {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
                                          {1, 5}, {1, 6}, {1, 8}, {2, 3}, {2, 4},
                                          {2, 7}, {3, 5}, {3, 7}, {3, 8}, {4, 6},
                                          {5, 8}, {6, 7}, {6, 8}, {7, 8}})});
    cat.push_back({"F12", build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                          {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
                                          {1, 5}, {1, 6}, {1, 8}, {2, 3}, {2, 4},
                                          {2, 7}, {2, 8}, {3, 5}, {3, 7}, {4, 5},
                                          {4, 8}, {6, 7}, {6, 8}, {7, 8}})});
    // Separability patterns: K2,3 plus an edge inside the 3-side, the wheel
    // W4, and K5 minus an edge.
    cat.push_back({"F13", build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                          {1, 4}, {2, 4}})});
    cat.push_back({"F14", build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4},
                                          {1, 4}, {2, 4}, {3, 4}})});
    cat.push_back({"F15", build_graph(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                          {1, 4}, {2, 3}, {2, 4}, {3, 4}})});
    return cat;
}

}  // namespace

const std::vector<pattern>& builtin_patterns() {
    static const std::vector<pattern> cat = make_builtin_patterns();
    return cat;
}

const pattern& pattern_by_name(const std::vector<pattern>& catalog, const std::string& name) {
    for (const auto& p : catalog)
        if (p.name == name) return p;
    throw std::invalid_argument("unknown pattern name: " + name);
}

const pattern& builtin_pattern(const std::string& name) {
    return pattern_by_name(builtin_patterns(), name);
}

namespace {

bool mask_connected(const std::vector<uint32_t>& adjm, uint32_t mask) {
    if (mask == 0) return false;
    uint32_t start = mask & (~mask + 1);
    uint32_t reached = start;
    uint32_t frontier = start;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adjm[v] & mask & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

}  // namespace

bool verify_model(const graph& g, const graph& h, const minor_model& m,
                  containment_mode mode) {
    if (static_cast<int>(m.branch_sets.size()) != h.n)
        throw std::invalid_argument("verify_model: model must have one branch set per pattern vertex");
    if (g.n > 32) throw std::invalid_argument("verify_model: host too large");
    auto adjm = adjacency_masks(g);
    std::vector<uint32_t> mask(h.n, 0);
    uint32_t used = 0;
    for (int s = 0; s < h.n; ++s) {
        if (m.branch_sets[s].empty())
            throw std::invalid_argument("verify_model: empty branch set");
        for (int v : m.branch_sets[s]) {
            if (v < 0 || v >= g.n)
                throw std::invalid_argument("verify_model: branch set vertex out of range");
            uint32_t bit = uint32_t{1} << v;
            if ((mask[s] | used) & bit & ~mask[s]) return false;  // overlap between sets
            if (mask[s] & bit) return false;                      // duplicate inside a set
            mask[s] |= bit;
            used |= bit;
        }
    }
    for (int s = 0; s < h.n; ++s)
        if (!mask_connected(adjm, mask[s])) return false;
    for (int s = 0; s < h.n; ++s)
        for (int t = s + 1; t < h.n; ++t) {
            bool cross = false;
            uint32_t f = mask[s];
            while (f && !cross) {
                int v = std::countr_zero(f);
                f &= f - 1;
                cross = (adjm[v] & mask[t]) != 0;
            }
            bool want = h.has_edge(s, t);
            if (mode == containment_mode::minor) {
                if (want && !cross) return false;
            } else {
                if (want != cross) return false;
            }
        }
    return true;
}

namespace {

struct containment_search {
    const graph& g;
    const graph& h;
    containment_mode mode;
    std::vector<uint32_t> adjm;
    std::vector<int> host_order;   // decreasing degree
    std::vector<int> slot_order;   // decreasing pattern degree
    std::vector<uint32_t> mask;    // branch set per slot
    std::vector<uint32_t> nbr;     // union of adjacency masks per slot
    std::vector<uint32_t> solution;
    std::vector<std::vector<char>> hadj;
    int empty_slots;
    bool found = false;

    containment_search(const graph& g, const graph& h, containment_mode mode)
        : g(g), h(h), mode(mode), adjm(adjacency_masks(g)),
          mask(h.n, 0), nbr(h.n, 0), empty_slots(h.n) {
        host_order.resize(g.n);
        for (int v = 0; v < g.n; ++v) host_order[v] = v;
        std::stable_sort(host_order.begin(), host_order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        slot_order.resize(h.n);
        for (int s = 0; s < h.n; ++s) slot_order[s] = s;
        std::stable_sort(slot_order.begin(), slot_order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        hadj.assign(h.n, std::vector<char>(h.n, 0));
        for (int s = 0; s < h.n; ++s)
            for (int t : h.adj[s]) hadj[s][t] = 1;
    }

    bool leaf_ok() {
        for (int s = 0; s < h.n; ++s)
            if (!mask_connected(adjm, mask[s])) return false;
        for (int s = 0; s < h.n; ++s)
            for (int t = s + 1; t < h.n; ++t) {
                bool cross = (nbr[s] & mask[t]) != 0;
                if (hadj[s][t] && !cross) return false;
                if (mode == containment_mode::induced && !hadj[s][t] && cross) return false;
            }
        return true;
    }

    void search(int i) {
        if (found) return;
        int remaining = g.n - i;
        if (remaining < empty_slots) return;
        if (i == g.n) {
            if (empty_slots == 0 && leaf_ok()) {
                found = true;
                solution = mask;
            }
            return;
        }
        int x = host_order[i];
        uint32_t xbit = uint32_t{1} << x;
        for (int s : slot_order) {
            if (mode == containment_mode::induced) {
                bool bad = false;
                for (int t = 0; t < h.n && !bad; ++t)
                    if (t != s && (adjm[x] & mask[t]) && !hadj[s][t]) bad = true;
                if (bad) continue;
            }
            bool was_empty = mask[s] == 0;
            mask[s] |= xbit;
            nbr[s] |= adjm[x];
            if (was_empty) --empty_slots;
            search(i + 1);
            if (was_empty) ++empty_slots;
            mask[s] &= ~xbit;
            // recompute nbr[s] lazily: cheaper to rebuild than to track
            nbr[s] = 0;
            uint32_t f = mask[s];
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                nbr[s] |= adjm[v];
            }
            if (found) return;
        }
        search(i + 1);  // x unused
    }
};

}  // namespace

std::optional<minor_model> find_containment(const graph& g, const graph& h,
                                            containment_mode mode) {
    if (g.n > 32) throw std::invalid_argument("find_containment: host too large");
    if (h.n == 0 || h.n > g.n) return std::nullopt;
    containment_search s(g, h, mode);
    s.search(0);
    if (!s.found) return std::nullopt;
    minor_model m;
    m.branch_sets.resize(h.n);
    for (int slot = 0; slot < h.n; ++slot)
        for (int v = 0; v < g.n; ++v)
            if (s.solution[slot] >> v & 1) m.branch_sets[slot].push_back(v);
    return m;
}

}  // namespace orient
