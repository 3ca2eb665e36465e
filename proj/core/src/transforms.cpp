#include "corospec/transforms.hpp"

namespace corospec {

namespace {

// Edge indices incident to each vertex, in canonical edge order.
std::vector<std::vector<int>> incident_edges(const Graph& g) {
    std::vector<std::vector<int>> inc(g.vertex_count());
    const auto& edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        inc[edges[e].first].push_back(e);
        inc[edges[e].second].push_back(e);
    }
    return inc;
}

// Pairs of edge indices sharing an endpoint (the line-graph edge set).
std::vector<Edge> adjacent_edge_pairs(const Graph& g) {
    std::vector<Edge> pairs;
    for (const auto& list : incident_edges(g))
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b)
                pairs.emplace_back(list[a], list[b]);
    return pairs;
}

} // namespace

Graph line_graph(const Graph& g) {
    return Graph::from_edge_list(g.edge_count(), adjacent_edge_pairs(g));
}

DerivedGraph q_graph(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges;
    const auto& ge = g.edges();
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(ge[e].first, n + e);
        edges.emplace_back(ge[e].second, n + e);
    }
    for (auto [e, f] : adjacent_edge_pairs(g))
        edges.emplace_back(n + e, n + f);
    CompositeLayout layout{{0, n}, {n, n + m}, {}};
    return {Graph::from_edge_list(n + m, edges), layout};
}

DerivedGraph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges = g.edges();
    const auto& ge = g.edges();
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(ge[e].first, n + e);
        edges.emplace_back(ge[e].second, n + e);
    }
    for (auto [e, f] : adjacent_edge_pairs(g))
        edges.emplace_back(n + e, n + f);
    CompositeLayout layout{{0, n}, {n, n + m}, {}};
    return {Graph::from_edge_list(n + m, edges), layout};
}

DerivedGraph splitting_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(n + u, v); // twin of u reaches the neighborhood of u
        edges.emplace_back(n + v, u);
    }
    CompositeLayout layout{{0, n}, {n, 2 * n}, {}};
    return {Graph::from_edge_list(2 * n, edges), layout};
}

} // namespace corospec
