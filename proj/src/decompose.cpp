#include "orient/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orient {

namespace {

struct block_dfs {
    const graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> blocks;
    std::set<int> cuts;
    int counter = 0;

    explicit block_dfs(const graph& g) : g(g), num(g.n, -1), low(g.n, 0) {}

    void pop_block(std::pair<int, int> top_edge) {
        std::set<int> verts;
        while (true) {
            auto e = estack.back();
            estack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == top_edge) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void run(int u, int parent) {
        num[u] = low[u] = counter++;
        int children = 0;
        for (int v : g.adj[u]) {
            if (v == parent) {
                parent = -2;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (num[v] == -1) {
                ++children;
                estack.push_back({u, v});
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    if (num[u] > 0 || children > 1) cuts.insert(u);
                    pop_block({u, v});
                }
            } else if (num[v] < num[u]) {
                estack.push_back({u, v});
                low[u] = std::min(low[u], num[v]);
            }
        }
    }
};

}  // namespace

block_decomposition blocks_and_cut_vertices(const graph& g) {
    if (g.n == 0 || !is_connected(g))
        throw std::invalid_argument("blocks_and_cut_vertices: graph not connected");
    block_decomposition d;
    if (g.n == 1) {
        d.blocks = {{0}};
        return d;
    }
    block_dfs dfs(g);
    dfs.run(0, -1);
    d.blocks = std::move(dfs.blocks);
    d.cut_vertices.assign(dfs.cuts.begin(), dfs.cuts.end());
    for (size_t b = 0; b < d.blocks.size(); ++b)
        for (int v : d.blocks[b])
            if (dfs.cuts.count(v)) d.tree_edges.emplace_back(static_cast<int>(b), v);
    return d;
}

tree_orientation rooted_tree_orientation(const graph& t, int root) {
    if (!is_tree(t)) throw std::invalid_argument("rooted_tree_orientation: not a tree");
    if (root < 0 || root >= t.n)
        throw std::invalid_argument("rooted_tree_orientation: root out of range");
    tree_orientation o;
    o.root = root;
    o.parent.assign(t.n, -1);
    std::vector<int> stack{root};
    std::vector<char> seen(t.n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : t.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                o.parent[v] = u;
                stack.push_back(v);
            }
    }
    return o;
}

namespace {

// Extends the chordless path `path` (path[0] = start, all others > start).
// A new vertex must be adjacent to the path's tail and to no interior vertex;
// if it is adjacent to the start the cycle closes and is reported, otherwise
// the path grows.
void extend_chordless(const graph& g, std::vector<int>& path, std::vector<char>& on_path,
                      std::vector<std::vector<int>>& out) {
    const int start = path[0];
    const int tail = path.back();
    for (int w : g.adj[tail]) {
        if (w <= start || on_path[w]) continue;
        bool chord = false;
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (g.has_edge(w, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (g.has_edge(w, start)) {
            if (path[1] < w) {  // report each cycle once (kills the reflection)
                auto cyc = path;
                cyc.push_back(w);
                out.push_back(std::move(cyc));
            }
            continue;  // any extension through w would leave the chord {w,start}
        }
        path.push_back(w);
        on_path[w] = 1;
        extend_chordless(g, path, on_path, out);
        on_path[w] = 0;
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> chordless_cycles(const graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> on_path(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        for (int v : g.adj[s]) {
            if (v <= s) continue;
            std::vector<int> path{s, v};
            on_path[s] = on_path[v] = 1;
            extend_chordless(g, path, on_path, out);
            on_path[s] = on_path[v] = 0;
        }
    }
    return out;
}

std::vector<std::vector<int>> holes(const graph& g) {
    std::vector<std::vector<int>> out;
    for (auto& c : chordless_cycles(g))
        if (c.size() >= 4) out.push_back(c);
    return out;
}

}  // namespace orient
