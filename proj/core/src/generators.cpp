#include "corospec/generators.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace corospec {

Graph cycle_graph(int k) {
    if (k < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(k);
    for (int i = 0; i < k; ++i)
        edges.emplace_back(i, (i + 1) % k);
    return Graph::from_edge_list(k, edges);
}

Graph complete_graph(int k) {
    if (k < 1)
        throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    edges.reserve(k * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(k, edges);
}

Graph path_graph(int k) {
    if (k < 1)
        throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(k, edges);
}

Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("complete bipartite parts must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            edges.emplace_back(i, p + j);
    return Graph::from_edge_list(p + q, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edge_list(10, edges);
}

namespace {

int parse_int(std::string_view token, std::string_view spec) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("bad size parameter in family spec '" +
                                    std::string(spec) + "'");
    return value;
}

} // namespace

Graph generate(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view family = spec.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos
                                ? std::string_view{}
                                : spec.substr(colon + 1);

    if (family == "petersen") {
        if (!rest.empty())
            throw std::invalid_argument("petersen takes no parameters");
        return petersen_graph();
    }
    if (family == "cycle")
        return cycle_graph(parse_int(rest, spec));
    if (family == "complete")
        return complete_graph(parse_int(rest, spec));
    if (family == "path")
        return path_graph(parse_int(rest, spec));
    if (family == "complete_bipartite") {
        auto sep = rest.find(':');
        if (sep == std::string_view::npos)
            throw std::invalid_argument("complete_bipartite needs two sizes, e.g. "
                                        "complete_bipartite:2:3");
        return complete_bipartite_graph(parse_int(rest.substr(0, sep), spec),
                                        parse_int(rest.substr(sep + 1), spec));
    }
    throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

} // namespace corospec
