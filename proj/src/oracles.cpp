#include "orient/oracles.hpp"

#include <algorithm>

#include "orient/decompose.hpp"

namespace orient {

namespace {

struct one_perfect_search {
    const graph& g;
    const std::vector<std::pair<int, int>> edges;
    std::optional<int> forced_sink;
    const std::function<bool(const orientation&)>& visit;
    std::vector<char> dir;
    std::vector<std::vector<int>> out;
    bool stopped = false;

    one_perfect_search(const graph& g, std::optional<int> fs,
                       const std::function<bool(const orientation&)>& visit)
        : g(g), edges(edge_list(g)), forced_sink(fs), visit(visit),
          dir(edges.size(), 0), out(g.n) {}

    bool clique_with_out(int v, int w) const {
        for (int x : out[v])
            if (!g.has_edge(w, x)) return false;
        return true;
    }

    void try_direction(size_t e, int tail, int head, bool flag) {
        if (forced_sink && tail == *forced_sink) return;
        if (!clique_with_out(tail, head)) return;
        dir[e] = flag;
        out[tail].push_back(head);
        assign(e + 1);
        out[tail].pop_back();
    }

    void assign(size_t e) {
        if (stopped) return;
        if (e == edges.size()) {
            if (!visit(orientation{g, dir})) stopped = true;
            return;
        }
        auto [u, v] = edges[e];
        try_direction(e, u, v, 1);  // low -> high first
        try_direction(e, v, u, 0);
    }
};

}  // namespace

void enumerate_one_perfect(const graph& g, std::optional<int> forced_sink,
                           const std::function<bool(const orientation&)>& visit) {
    if (forced_sink && (*forced_sink < 0 || *forced_sink >= g.n))
        throw std::invalid_argument("enumerate_one_perfect: forced sink out of range");
    one_perfect_search s(g, forced_sink, visit);
    s.assign(0);
}

uint64_t count_one_perfect(const graph& g, std::optional<int> forced_sink) {
    uint64_t n = 0;
    enumerate_one_perfect(g, forced_sink, [&](const orientation&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<orientation> collect_one_perfect(const graph& g,
                                             std::optional<int> forced_sink) {
    std::vector<orientation> all;
    enumerate_one_perfect(g, forced_sink, [&](const orientation& d) {
        all.push_back(d);
        return true;
    });
    return all;
}

std::optional<orientation> first_one_perfect(const graph& g,
                                             std::optional<int> forced_sink) {
    std::optional<orientation> found;
    enumerate_one_perfect(g, forced_sink, [&](const orientation& d) {
        found = d;
        return false;
    });
    return found;
}

two_sat_instance build_one_perfect_instance(const graph& g,
                                            std::optional<int> forced_sink) {
    auto edges = edge_list(g);
    std::vector<std::vector<int>> var_at(g.n);  // var_at[u][i] = var of edge {u, adj[u][i]}
    for (int u = 0; u < g.n; ++u) var_at[u].resize(g.adj[u].size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        auto iu = std::lower_bound(g.adj[u].begin(), g.adj[u].end(), v) - g.adj[u].begin();
        auto iv = std::lower_bound(g.adj[v].begin(), g.adj[v].end(), u) - g.adj[v].begin();
        var_at[u][iu] = static_cast<int>(e);
        var_at[v][iv] = static_cast<int>(e);
    }
    // literal "v -> w": positive when v is the low endpoint
    auto lit_towards = [&](int v, size_t i) {
        int w = g.adj[v][i];
        int var = var_at[v][i];
        return v < w ? 2 * var : 2 * var + 1;
    };
    two_sat_instance inst;
    inst.num_vars = static_cast<int>(edges.size());
    for (int v = 0; v < g.n; ++v) {
        for (size_t i = 0; i < g.adj[v].size(); ++i)
            for (size_t j = i + 1; j < g.adj[v].size(); ++j) {
                if (g.has_edge(g.adj[v][i], g.adj[v][j])) continue;
                inst.clauses.emplace_back(lit_towards(v, i) ^ 1, lit_towards(v, j) ^ 1);
            }
    }
    if (forced_sink) {
        int s = *forced_sink;
        if (s < 0 || s >= g.n)
            throw std::invalid_argument("build_one_perfect_instance: sink out of range");
        for (size_t i = 0; i < g.adj[s].size(); ++i) {
            // orient the edge from the neighbor into s
            int u = g.adj[s][i];
            auto iu = std::lower_bound(g.adj[u].begin(), g.adj[u].end(), s) - g.adj[u].begin();
            int l = lit_towards(u, static_cast<size_t>(iu));
            inst.clauses.emplace_back(l, l);
        }
    }
    return inst;
}

namespace {

// Iterative Tarjan over the implication graph.
struct scc_solver {
    int n_nodes;
    std::vector<std::vector<int>> adj;
    std::vector<int> comp, low, num;
    std::vector<int> stack;
    std::vector<char> on_stack;
    int counter = 0, ncomp = 0;

    explicit scc_solver(int n) : n_nodes(n), adj(n), comp(n, -1), low(n, 0), num(n, -1),
                                 on_stack(n, 0) {}

    void run(int root) {
        // explicit DFS stack of (node, next child index)
        std::vector<std::pair<int, size_t>> frames{{root, 0}};
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            }
        }
    }
};

}  // namespace

std::optional<std::vector<char>> solve_two_sat(const two_sat_instance& inst) {
    scc_solver scc(2 * inst.num_vars);
    for (auto [a, b] : inst.clauses) {
        scc.adj[a ^ 1].push_back(b);
        if (a != b) scc.adj[b ^ 1].push_back(a);
    }
    for (int v = 0; v < scc.n_nodes; ++v)
        if (scc.num[v] == -1) scc.run(v);
    std::vector<char> value(inst.num_vars, 0);
    for (int x = 0; x < inst.num_vars; ++x) {
        if (scc.comp[2 * x] == scc.comp[2 * x + 1]) return std::nullopt;
        value[x] = scc.comp[2 * x] < scc.comp[2 * x + 1];
    }
    return value;
}

std::optional<orientation> is_1po_2sat(const graph& g, std::optional<int> forced_sink) {
    auto assignment = solve_two_sat(build_one_perfect_instance(g, forced_sink));
    if (!assignment) return std::nullopt;
    return orientation{g, std::move(*assignment)};
}

bool cyclic_orientation_exists(const graph& g) {
    auto edges = edge_list(g);
    std::vector<std::vector<int>> edge_of(g.n);
    auto edge_index = [&](int u, int v) {
        auto key = std::minmax(u, v);
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(),
                                                 std::pair{key.first, key.second}) -
                                edges.begin());
    };
    // For each chordless cycle, list its edges with the direction that walks
    // the cycle forward. A cyclic orientation must orient all of them forward
    // or all backward, so each cycle has a tri-state: unknown / fixed either way.
    struct cycle_info {
        std::vector<std::pair<int, char>> members;  // (edge index, forward == low->high)
    };
    std::vector<cycle_info> cycles;
    std::vector<std::vector<std::pair<int, char>>> cycles_of_edge(edges.size());
    for (auto& cyc : chordless_cycles(g)) {
        cycle_info info;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            info.members.emplace_back(edge_index(u, v), u < v);
        }
        int ci = static_cast<int>(cycles.size());
        for (auto [e, fwd] : info.members) cycles_of_edge[e].emplace_back(ci, fwd);
        cycles.push_back(std::move(info));
    }
    std::vector<char> cycle_state(cycles.size(), 0);  // 0 unknown, 1 forward, 2 backward

    std::vector<char> dir(edges.size(), 0);
    std::function<bool(size_t)> assign = [&](size_t e) -> bool {
        if (e == edges.size()) return true;
        if (cycles_of_edge[e].empty()) return assign(e + 1);  // unconstrained edge
        for (char d : {1, 0}) {
            std::vector<int> touched;
            bool ok = true;
            for (auto [ci, fwd] : cycles_of_edge[e]) {
                char want = (d == fwd) ? 1 : 2;
                if (cycle_state[ci] == 0) {
                    cycle_state[ci] = want;
                    touched.push_back(ci);
                } else if (cycle_state[ci] != want) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                dir[e] = d;
                if (assign(e + 1)) return true;
            }
            for (int ci : touched) cycle_state[ci] = 0;
        }
        return false;
    };
    return assign(0);
}

}  // namespace orient
