#include "corospec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace corospec {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& raw_edges) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto adj = adjacency_lists();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n_;
}

DegreeInfo degree_info(const Graph& g) {
    DegreeInfo info;
    info.degrees = g.degrees();
    if (!info.degrees.empty() &&
        std::all_of(info.degrees.begin(), info.degrees.end(),
                    [&](int d) { return d == info.degrees.front(); }))
        info.regular_degree = info.degrees.front();
    return info;
}

} // namespace corospec
