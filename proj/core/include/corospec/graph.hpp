#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace corospec {

using Edge = std::pair<int, int>;

// Simple undirected graph: vertex count plus a canonical edge list.
// Edges are stored with u < v, sorted lexicographically; that order defines
// the edge indices used by the line/Q/total constructions downstream.
class Graph {
public:
    // Canonicalizes raw input: normalizes endpoint order, sorts, rejects
    // self-loops and out-of-range endpoints, drops duplicates.
    static Graph from_edge_list(int n, const std::vector<Edge>& raw_edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

    // Neighbor lists, index-aligned with vertices; each list sorted ascending.
    std::vector<std::vector<int>> adjacency_lists() const;

    std::vector<int> degrees() const;

    bool is_connected() const;

    bool operator==(const Graph& other) const = default;

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<Edge> edges_;
};

struct DegreeInfo {
    std::vector<int> degrees;
    std::optional<int> regular_degree; // present iff all degrees equal setwise
};

DegreeInfo degree_info(const Graph& g);

} // namespace corospec
