#include "orient/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace orient {

graph gen_two_tree(int n, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_two_tree: n < 2");
    splitmix64 rng(seed);
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int v = 2; v < n; ++v) {
        auto [a, b] = edges[rng.pick(static_cast<int>(edges.size()))];
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
    }
    return build_graph(n, edges);
}

graph gen_hollowed_two_tree(int n, int hole_len, uint64_t seed) {
    if (hole_len < 4) throw std::invalid_argument("gen_hollowed_two_tree: hole length < 4");
    if (n < hole_len) throw std::invalid_argument("gen_hollowed_two_tree: n < hole length");
    splitmix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < hole_len; ++i) edges.emplace_back(i, (i + 1) % hole_len);
    for (int v = hole_len; v < n; ++v) {
        auto [a, b] = edges[rng.pick(static_cast<int>(edges.size()))];
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
    }
    return build_graph(n, edges);
}

graph gen_block_cactus(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_block_cactus: n < 1");
    splitmix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;  // vertex 0 exists
    while (built < n) {
        int room = n - built;
        int cut = rng.pick(built);  // attach the new block here
        // block adds k new vertices, 1 <= k <= min(room, 4)
        int k = 1 + rng.pick(std::min(room, 4));
        bool cycle_block = k >= 2 && rng.pick(2) == 0;  // cycle length k+1 >= 3
        std::vector<int> verts{cut};
        for (int i = 0; i < k; ++i) verts.push_back(built + i);
        built += k;
        if (cycle_block) {
            for (size_t i = 0; i < verts.size(); ++i)
                edges.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
        } else {
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j)
                    edges.emplace_back(verts[i], verts[j]);
        }
    }
    return build_graph(n, edges);
}

graph gen_paste_sep2(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_paste_sep2: n < 1");
    splitmix64 rng(seed);
    auto random_piece = [&](int max_verts) {
        // complete graph on 1..min(5,max) vertices or cycle on 3..min(6,max)
        if (max_verts >= 3 && rng.pick(2) == 0) {
            int len = 3 + rng.pick(std::min(6, max_verts) - 2);
            return cycle_graph(len);
        }
        int size = 1 + rng.pick(std::min(5, max_verts));
        return complete_graph(size);
    };
    graph g = random_piece(n);
    while (g.n < n) {
        graph piece = random_piece(n - g.n + 2);  // up to 2 vertices get identified
        int r = rng.pick(3);  // paste along a clique of size 0, 1, or 2
        std::vector<int> c1, c2;
        if (r >= 1) {
            c1.push_back(rng.pick(g.n));
            c2.push_back(rng.pick(piece.n));
        }
        if (r == 2) {
            // extend both sides by an adjacent vertex when possible
            auto& n1 = g.adj[c1[0]];
            auto& n2 = piece.adj[c2[0]];
            if (!n1.empty() && !n2.empty()) {
                c1.push_back(n1[rng.pick(static_cast<int>(n1.size()))]);
                c2.push_back(n2[rng.pick(static_cast<int>(n2.size()))]);
            }
        }
        graph next = paste(g, c1, piece, c2);
        if (next.n > n) break;  // piece would overshoot; keep what we have
        g = std::move(next);
        if (static_cast<int>(c1.size()) == 0 && g.n >= n) break;
    }
    return g;
}

graph generate(const generator_spec& spec) {
    if (spec.kind == "cycle") return cycle_graph(spec.n);
    if (spec.kind == "complete") return complete_graph(spec.n);
    if (spec.kind == "path") return path_graph(spec.n);
    if (spec.kind == "star") return star_graph(spec.n);
    if (spec.kind == "grid") return grid_graph(spec.n);
    if (spec.kind == "two_tree") return gen_two_tree(spec.n, spec.seed);
    if (spec.kind == "hollowed_two_tree")
        return gen_hollowed_two_tree(spec.n, spec.hole, spec.seed);
    if (spec.kind == "block_cactus") return gen_block_cactus(spec.n, spec.seed);
    if (spec.kind == "paste_sep2") return gen_paste_sep2(spec.n, spec.seed);
    throw std::invalid_argument("generate: unknown kind " + spec.kind);
}

graph apply_steps(const build_sequence& seq, bool enforce_a2_prime) {
    std::vector<char> present(seq.n, 0);
    auto mark = [&](int v) {
        if (v < 0 || v >= seq.n) throw std::invalid_argument("apply_steps: vertex out of range");
        if (present[v]) throw std::invalid_argument("apply_steps: vertex added twice");
        present[v] = 1;
    };
    std::vector<std::pair<int, int>> edges;
    for (int v : seq.base) mark(v);
    if (seq.base.size() == 2 || (seq.base.size() > 1 && seq.base.size() < 3))
        throw std::invalid_argument("apply_steps: base must be K1 or a cycle");
    if (seq.base.size() >= 3)
        for (size_t i = 0; i < seq.base.size(); ++i)
            edges.emplace_back(seq.base[i], seq.base[(i + 1) % seq.base.size()]);
    graph cur = build_graph(seq.n, edges);
    for (const auto& st : seq.steps) {
        if (st.a < 0 || st.a >= seq.n || !present[st.a])
            throw std::invalid_argument("apply_steps: step references a missing vertex");
        if (st.a2) {
            if (st.b < 0 || st.b >= seq.n || !present[st.b])
                throw std::invalid_argument("apply_steps: step references a missing vertex");
            if (!cur.has_edge(st.a, st.b))
                throw std::invalid_argument("apply_steps: A2 target is not an edge");
            if (enforce_a2_prime && induced_cycles_through_edge(cur, st.a, st.b) > 1)
                throw std::invalid_argument("apply_steps: A2' violated, edge lies in two induced cycles");
        }
        mark(st.v);
        edges.emplace_back(st.v, st.a);
        if (st.a2) edges.emplace_back(st.v, st.b);
        cur = build_graph(seq.n, edges);
    }
    for (int v = 0; v < seq.n; ++v)
        if (!present[v]) throw std::invalid_argument("apply_steps: vertex never added");
    return cur;
}

}  // namespace orient
