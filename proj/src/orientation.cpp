#include "orient/orientation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orient {

std::vector<std::pair<int, int>> arcs(const orientation& d) {
    auto edges = edge_list(d.host);
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (d.dir[e])
            out.emplace_back(u, v);
        else
            out.emplace_back(v, u);
    }
    return out;
}

std::vector<std::vector<int>> out_neighbors(const orientation& d) {
    std::vector<std::vector<int>> out(d.host.n);
    for (auto [u, v] : arcs(d)) out[u].push_back(v);
    for (auto& o : out) std::sort(o.begin(), o.end());
    return out;
}

bool is_one_perfect(const orientation& d) {
    auto out = out_neighbors(d);
    for (int v = 0; v < d.host.n; ++v)
        if (!is_clique(d.host, out[v])) return false;
    return true;
}

std::vector<int> sinks(const orientation& d) {
    std::vector<int> outdeg(d.host.n, 0);
    for (auto [u, v] : arcs(d)) ++outdeg[u];
    std::vector<int> s;
    for (int v = 0; v < d.host.n; ++v)
        if (outdeg[v] == 0) s.push_back(v);
    return s;
}

bool is_in_tree(const orientation& d) {
    if (!is_tree(d.host)) throw std::invalid_argument("is_in_tree: host is not a tree");
    // In an orientation of a tree, being an in-tree is equivalent to having
    // exactly one sink and out-degree one everywhere else: unique out-arcs
    // cannot cycle on an acyclic host, so every walk ends at the sink.
    std::vector<int> outdeg(d.host.n, 0);
    for (auto [u, v] : arcs(d)) ++outdeg[u];
    int sink_count = 0;
    for (int v = 0; v < d.host.n; ++v) {
        if (outdeg[v] == 0)
            ++sink_count;
        else if (outdeg[v] != 1)
            return false;
    }
    return sink_count == 1;
}

orientation orientation_from_arcs(const graph& host,
                                  const std::vector<std::pair<int, int>>& arc_list) {
    auto edges = edge_list(host);
    std::map<std::pair<int, int>, size_t> index;
    for (size_t e = 0; e < edges.size(); ++e) index[edges[e]] = e;
    orientation d{host, std::vector<char>(edges.size(), 0)};
    std::vector<char> seen(edges.size(), 0);
    for (auto [u, v] : arc_list) {
        auto key = std::minmax(u, v);
        auto it = index.find({key.first, key.second});
        if (it == index.end())
            throw std::invalid_argument("orientation_from_arcs: arc is not a host edge");
        if (seen[it->second])
            throw std::invalid_argument("orientation_from_arcs: edge oriented twice");
        seen[it->second] = 1;
        d.dir[it->second] = (u < v);
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("orientation_from_arcs: edge left unoriented");
    return d;
}

}  // namespace orient
