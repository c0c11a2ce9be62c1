#include "orient/classes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "orient/decompose.hpp"
#include "orient/patterns.hpp"

namespace orient {

bool is_peo(const graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n) return false;
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < g.n; ++i) {
        if (order[i] < 0 || order[i] >= g.n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> later;
        for (int w : g.adj[v])
            if (pos[w] > pos[v]) later.push_back(w);
        if (!is_clique(g, later)) return false;
    }
    return true;
}

std::optional<elimination_ordering> is_chordal(const graph& g) {
    // Maximum cardinality search; the reverse visit order is a PEO iff chordal.
    std::vector<int> weight(g.n, 0), visit;
    std::vector<char> seen(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v] && (best == -1 || weight[v] > weight[best])) best = v;
        seen[best] = 1;
        visit.push_back(best);
        for (int w : g.adj[best])
            if (!seen[w]) ++weight[w];
    }
    std::reverse(visit.begin(), visit.end());
    if (!is_peo(g, visit)) return std::nullopt;
    return elimination_ordering{visit};
}

namespace {

// Simplicial test on the graph restricted to alive vertices.
bool simplicial_in_alive(const graph& g, const std::vector<char>& alive, int v) {
    std::vector<int> nbrs;
    for (int w : g.adj[v])
        if (alive[w]) nbrs.push_back(w);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) return false;
    return true;
}

}  // namespace

elimination_ordering peo_starting_at(const graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("peo_starting_at: vertex out of range");
    if (!is_chordal(g)) throw std::invalid_argument("peo_starting_at: graph not chordal");
    std::vector<char> alive(g.n, 1);
    std::vector<int> deleted;
    for (int step = 0; step + 1 < g.n; ++step) {
        int pick = -1;
        for (int u = 0; u < g.n && pick == -1; ++u)
            if (alive[u] && u != v && simplicial_in_alive(g, alive, u)) pick = u;
        // A chordal graph is complete or has two non-adjacent simplicial
        // vertices, so a simplicial vertex other than v always exists.
        alive[pick] = 0;
        deleted.push_back(pick);
    }
    elimination_ordering sigma;
    sigma.order.push_back(v);
    for (auto it = deleted.rbegin(); it != deleted.rend(); ++it) sigma.order.push_back(*it);
    return sigma;
}

namespace {

std::optional<reduction_trace> reduce_simplicial_deg2(const graph& g,
                                                      const std::vector<int>& preference,
                                                      bool want_2tree) {
    std::vector<char> alive(g.n, 1);
    std::vector<std::vector<int>> adj = g.adj;
    auto degree_of = [&](int v) {
        int d = 0;
        for (int w : adj[v])
            if (alive[w]) ++d;
        return d;
    };
    auto alive_nbrs = [&](int v) {
        std::vector<int> r;
        for (int w : adj[v])
            if (alive[w]) r.push_back(w);
        return r;
    };
    reduction_trace t;
    int remaining = g.n;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v : preference) {
            if (!alive[v] || degree_of(v) != 2) continue;
            auto nb = alive_nbrs(v);
            if (!g.has_edge(nb[0], nb[1])) continue;
            alive[v] = 0;
            --remaining;
            t.removed.push_back({v, nb[0], nb[1]});
            progress = true;
            break;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (alive[v]) t.residue_vertices.push_back(v);
    for (int u : t.residue_vertices)
        for (int w : adj[u])
            if (u < w && alive[w]) t.residue_edges.emplace_back(u, w);
    graph residue = induced_subgraph(g, t.residue_vertices);
    bool ok = want_2tree ? (remaining == 2 && residue.has_edge(0, 1))
                         : is_cycle_graph(residue) && residue.n >= 4;
    if (!ok) return std::nullopt;
    return t;
}

std::vector<int> identity_order(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

graph replay_trace(int n, const reduction_trace& t) {
    std::vector<std::pair<int, int>> edges = t.residue_edges;
    for (auto [v, a, b] : t.removed) {
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
    }
    return build_graph(n, edges);
}

std::optional<reduction_trace> is_2tree(const graph& g) {
    return reduce_simplicial_deg2(g, identity_order(g.n), true);
}

std::optional<reduction_trace> is_hollowed_2tree(const graph& g) {
    return reduce_simplicial_deg2(g, identity_order(g.n), false);
}

std::optional<reduction_trace> is_2tree_ordered(const graph& g,
                                                const std::vector<int>& preference) {
    return reduce_simplicial_deg2(g, preference, true);
}

std::optional<reduction_trace> is_hollowed_2tree_ordered(const graph& g,
                                                         const std::vector<int>& preference) {
    return reduce_simplicial_deg2(g, preference, false);
}

bool is_k4_minor_free(const graph& g) {
    // Work on adjacency sets; parallel edges collapse automatically.
    std::vector<std::vector<int>> adj = g.adj;
    std::vector<char> alive(g.n, 1);
    auto remove_from = [&](int list_owner, int v) {
        auto& a = adj[list_owner];
        a.erase(std::remove(a.begin(), a.end(), v), a.end());
    };
    int remaining = g.n;
    bool progress = true;
    while (progress && remaining > 0) {
        progress = false;
        for (int v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            int d = static_cast<int>(adj[v].size());
            if (d <= 1) {
                for (int w : adj[v]) remove_from(w, v);
                adj[v].clear();
                alive[v] = 0;
                --remaining;
                progress = true;
                break;
            }
            if (d == 2) {
                int a = adj[v][0], b = adj[v][1];
                remove_from(a, v);
                remove_from(b, v);
                adj[v].clear();
                alive[v] = 0;
                --remaining;
                if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
                progress = true;
                break;
            }
        }
    }
    return remaining == 0;
}

bool is_outerplanar(const graph& g) {
    const auto& pats = builtin_patterns();
    for (const char* name : {"K4", "K2_3", "K2_3_plus"})
        if (find_containment(g, pattern_by_name(pats, name).g, containment_mode::induced))
            return false;
    return true;
}

bool is_block_cactus(const graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_block_cactus: graph not connected");
    for (const auto& b : blocks_and_cut_vertices(g).blocks) {
        graph sub = induced_subgraph(g, b);
        if (!is_complete(sub) && !is_cycle_graph(sub)) return false;
    }
    return true;
}

bool separability_at_most_2(const graph& g) {
    auto comps = components(g);
    std::vector<int> comp_of(g.n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    auto connected_without = [&](int u, int v, int s1, int s2) {
        std::vector<char> blocked(g.n, 0), seen(g.n, 0);
        if (s1 >= 0) blocked[s1] = 1;
        if (s2 >= 0) blocked[s2] = 1;
        std::vector<int> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == v) return true;
            for (int y : g.adj[x])
                if (!seen[y] && !blocked[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        return false;
    };
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v) || comp_of[u] != comp_of[v]) continue;
            bool separated = false;
            for (int s1 = 0; s1 < g.n && !separated; ++s1) {
                if (s1 == u || s1 == v) continue;
                if (!connected_without(u, v, s1, -1)) separated = true;
                for (int s2 = s1 + 1; s2 < g.n && !separated; ++s2) {
                    if (s2 == u || s2 == v) continue;
                    if (!connected_without(u, v, s1, s2)) separated = true;
                }
            }
            if (!separated) return false;
        }
    return true;
}

bool has_k4_clique(const graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b : g.adj[a]) {
            if (b <= a) continue;
            for (int c : g.adj[a]) {
                if (c <= b || !g.has_edge(b, c)) continue;
                for (int d : g.adj[a])
                    if (d > c && g.has_edge(b, d) && g.has_edge(c, d)) return true;
            }
        }
    return false;
}

bool is_cyclically_orientable(const graph& g) {
    return !has_k4_clique(g) && separability_at_most_2(g);
}

}  // namespace orient
