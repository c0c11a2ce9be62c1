#include "orient/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orient {

bool graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("build_graph: vertex index out of range");
        if (u == v) throw std::invalid_argument("build_graph: self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<std::pair<int, int>> edge_list(const graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already sorted: u ascending, adj[u] sorted
}

int edge_count(const graph& g) {
    int m = 0;
    for (int u = 0; u < g.n; ++u) m += g.degree(u);
    return m / 2;
}

graph complement_graph(const graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return build_graph(g.n, edges);
}

graph contract_edge(const graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: {u,v} is not an edge");
    const int keep = std::min(u, v);
    const int drop = std::max(u, v);
    auto remap = [&](int w) { return w > drop ? w - 1 : w; };
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : edge_list(g)) {
        if (a == keep && b == drop) continue;
        int x = (a == drop) ? keep : remap(a);
        int y = (b == drop) ? keep : remap(b);
        if (x != y) edges.emplace_back(x, y);
    }
    return build_graph(g.n - 1, edges);
}

graph induced_subgraph(const graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        pos[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.adj[u])
            if (u < v && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return build_graph(static_cast<int>(verts.size()), edges);
}

graph paste(const graph& g1, const std::vector<int>& clique1,
            const graph& g2, const std::vector<int>& clique2) {
    if (clique1.size() != clique2.size())
        throw std::invalid_argument("paste: clique lists of unequal length");
    if (!is_clique(g1, clique1) || !is_clique(g2, clique2))
        throw std::invalid_argument("paste: list does not induce a clique");
    std::vector<int> map2(g2.n, -1);
    for (size_t i = 0; i < clique2.size(); ++i) map2[clique2[i]] = clique1[i];
    int next = g1.n;
    for (int v = 0; v < g2.n; ++v)
        if (map2[v] < 0) map2[v] = next++;
    std::vector<std::pair<int, int>> edges = edge_list(g1);
    for (auto [a, b] : edge_list(g2)) edges.emplace_back(map2[a], map2[b]);
    return build_graph(next, edges);
}

std::vector<std::vector<int>> components(const graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const graph& g) { return components(g).size() <= 1; }

bool is_tree(const graph& g) {
    return g.n >= 1 && edge_count(g) == g.n - 1 && is_connected(g);
}

bool is_complete(const graph& g) {
    return edge_count(g) == g.n * (g.n - 1) / 2;
}

bool is_cycle_graph(const graph& g) {
    if (g.n < 3 || edge_count(g) != g.n || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_clique(const graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n)
            throw std::invalid_argument("is_clique: vertex out of range");
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.has_edge(s[i], s[j])) return false;
    }
    return true;
}

std::vector<uint32_t> adjacency_masks(const graph& g) {
    if (g.n > 32) throw std::invalid_argument("adjacency_masks: n > 32");
    std::vector<uint32_t> m(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) m[u] |= uint32_t{1} << v;
    return m;
}

graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

graph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return build_graph(n, e);
}

graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return build_graph(a + b, e);
}

graph grid_graph(int k) {
    if (k < 1) throw std::invalid_argument("grid_graph: k < 1");
    std::vector<std::pair<int, int>> e;
    auto id = [k](int i, int j) { return i * k + j; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i + 1 < k) e.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < k) e.emplace_back(id(i, j), id(i, j + 1));
        }
    return build_graph(k * k, e);
}

}  // namespace orient
