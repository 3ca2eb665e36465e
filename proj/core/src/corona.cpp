#include "corospec/corona.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "corospec/transforms.hpp"

namespace corospec {

std::string_view to_string(CoronaKind kind) {
    switch (kind) {
        case CoronaKind::corona: return "corona";
        case CoronaKind::neighbourhood: return "neighbourhood";
        case CoronaKind::total: return "total";
        case CoronaKind::splitting: return "splitting";
        case CoronaKind::splitting_add_vertex: return "splitting-add-vertex";
        case CoronaKind::splitting_neighbourhood: return "splitting-neighbourhood";
        case CoronaKind::q_vertex: return "q-vertex";
        case CoronaKind::q_edge: return "q-edge";
    }
    return "?";
}

std::optional<CoronaKind> corona_kind_from_string(std::string_view name) {
    std::string key(name);
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "corona") return CoronaKind::corona;
    if (key == "neighbourhood" || key == "neighborhood") return CoronaKind::neighbourhood;
    if (key == "total") return CoronaKind::total;
    if (key == "splitting") return CoronaKind::splitting;
    if (key == "splitting-add-vertex") return CoronaKind::splitting_add_vertex;
    if (key == "splitting-neighbourhood" || key == "splitting-neighborhood")
        return CoronaKind::splitting_neighbourhood;
    if (key == "q-vertex") return CoronaKind::q_vertex;
    if (key == "q-edge") return CoronaKind::q_edge;
    return std::nullopt;
}

namespace {

struct Builder {
    std::vector<Edge> edges;

    void add(int u, int v) { edges.emplace_back(u, v); }

    void add_graph(const Graph& g, int offset) {
        for (auto [u, v] : g.edges())
            add(offset + u, offset + v);
    }

    // Joins every vertex of the copy at `offset` (width n2) to `host`.
    void attach_copy(int host, int offset, int n2) {
        for (int k = 0; k < n2; ++k)
            add(host, offset + k);
    }
};

} // namespace

Composite compose(CoronaKind kind, const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int m1 = g1.edge_count();
    const int n2 = g2.vertex_count();
    if (n1 == 0)
        throw std::invalid_argument("compose: first operand must be nonempty");

    const bool uses_q = kind == CoronaKind::q_vertex || kind == CoronaKind::q_edge;
    const bool uses_total = kind == CoronaKind::total;
    const bool uses_splitting = kind == CoronaKind::splitting ||
                                kind == CoronaKind::splitting_add_vertex ||
                                kind == CoronaKind::splitting_neighbourhood;
    if ((uses_q || uses_total) && m1 == 0)
        throw std::invalid_argument("compose: " + std::string(to_string(kind)) +
                                    " needs at least one edge in the first operand");

    Builder b;
    CompositeLayout layout;
    layout.base = {0, n1};

    int copies_offset = n1;
    if (uses_q || uses_total) {
        auto derived = uses_total ? total_graph(g1) : q_graph(g1);
        b.edges = derived.graph.edges();
        layout.aux = {n1, n1 + m1};
        copies_offset = n1 + m1;
    } else if (uses_splitting) {
        b.edges = splitting_graph(g1).graph.edges();
        layout.aux = {n1, 2 * n1};
        copies_offset = 2 * n1;
    } else {
        b.edges = g1.edges();
        layout.aux = {n1, n1};
    }

    const int copy_count = kind == CoronaKind::q_edge ? m1 : n1;
    const auto adj = g1.adjacency_lists();
    for (int i = 0; i < copy_count; ++i) {
        const int offset = copies_offset + i * n2;
        layout.copies.push_back({offset, offset + n2});
        b.add_graph(g2, offset);
        switch (kind) {
            case CoronaKind::corona:
            case CoronaKind::total:
            case CoronaKind::splitting:
            case CoronaKind::q_vertex:
                b.attach_copy(i, offset, n2);
                break;
            case CoronaKind::splitting_add_vertex:
                b.attach_copy(n1 + i, offset, n2);
                break;
            case CoronaKind::q_edge:
                b.attach_copy(n1 + i, offset, n2);
                break;
            case CoronaKind::neighbourhood:
            case CoronaKind::splitting_neighbourhood:
                for (int w : adj[i])
                    b.attach_copy(w, offset, n2);
                break;
        }
    }

    const int total_vertices = copies_offset + copy_count * n2;
    return {Graph::from_edge_list(total_vertices, b.edges), layout};
}

std::vector<int> degrees_of_composite(CoronaKind kind, const Graph& g1,
                                      const Graph& g2) {
    auto d1 = degree_info(g1);
    auto d2 = degree_info(g2);
    if (!d1.regular_degree || !d2.regular_degree)
        throw std::invalid_argument("degrees_of_composite needs regular operands");
    const int r1 = *d1.regular_degree;
    const int r2 = *d2.regular_degree;
    const int n1 = g1.vertex_count();
    const int m1 = g1.edge_count();
    const int n2 = g2.vertex_count();

    std::vector<int> out;
    auto emit = [&](int degree, int count) { out.insert(out.end(), count, degree); };

    switch (kind) {
        case CoronaKind::corona:
            emit(r1 + n2, n1);
            emit(r2 + 1, n1 * n2);
            break;
        case CoronaKind::neighbourhood:
            emit(r1 * (1 + n2), n1);
            emit(r2 + r1, n1 * n2);
            break;
        case CoronaKind::total:
            emit(2 * r1 + n2, n1);
            emit(2 * r1, m1);
            emit(r2 + 1, n1 * n2);
            break;
        case CoronaKind::splitting:
            emit(2 * r1 + n2, n1);
            emit(r1, n1);
            emit(r2 + 1, n1 * n2);
            break;
        case CoronaKind::splitting_add_vertex:
            emit(2 * r1, n1);
            emit(r1 + n2, n1);
            emit(r2 + 1, n1 * n2);
            break;
        case CoronaKind::splitting_neighbourhood:
            emit((2 + n2) * r1, n1);
            emit(r1, n1);
            emit(r2 + r1, n1 * n2);
            break;
        case CoronaKind::q_vertex:
            emit(r1 + n2, n1);
            emit(2 * r1, m1);
            emit(r2 + 1, n1 * n2);
            break;
        case CoronaKind::q_edge:
            emit(r1, n1);
            emit(2 * r1 + n2, m1);
            emit(r2 + 1, m1 * n2);
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace corospec
