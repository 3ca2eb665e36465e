#include "corospec/cospectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "corospec/eigensolver.hpp"
#include "corospec/errors.hpp"
#include "corospec/num_format.hpp"
#include "corospec/spectra.hpp"
#include "corospec/version.hpp"

namespace corospec {

Graph shrikhande_graph() {
    // Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
    std::vector<Edge> edges;
    auto id = [](int a, int b) { return 4 * ((a % 4 + 4) % 4) + ((b % 4 + 4) % 4); };
    const int dirs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& d : dirs)
                edges.emplace_back(id(a, b), id(a + d[0], b + d[1]));
    return Graph::from_edge_list(16, edges);
}

Graph rook4_graph() {
    // Vertices (i,j) on a 4x4 board, adjacent iff same row or same column.
    std::vector<Edge> edges;
    auto id = [](int i, int j) { return 4 * i + j; };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k)
                edges.emplace_back(id(i, j), id(i, k));
            for (int k = i + 1; k < 4; ++k)
                edges.emplace_back(id(i, j), id(k, j));
        }
    return Graph::from_edge_list(16, edges);
}

std::pair<std::string, std::string> catalog_seed_names(std::string_view key) {
    if (key != "shrikhande_rook4")
        throw std::invalid_argument("unknown cospectral catalog key '" +
                                    std::string(key) + "'");
    return {"shrikhande", "rook4"};
}

std::pair<Graph, Graph> known_regular_cospectral_pair(std::string_view key) {
    if (key != "shrikhande_rook4")
        throw std::invalid_argument("unknown cospectral catalog key '" +
                                    std::string(key) + "'");
    Graph g1 = shrikhande_graph();
    Graph g2 = rook4_graph();
    auto s1 = sym_eigenvalues(adjacency_matrix(g1));
    auto s2 = sym_eigenvalues(adjacency_matrix(g2));
    if (!spectra_equal(s1, s2, 1e-8).equal)
        throw InvariantError("cospectral catalog: seed pair failed the "
                             "load-time spectrum check");
    return {std::move(g1), std::move(g2)};
}

std::vector<int> clique4_counts(const Graph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<int> counts(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = adj[v];
        int triangles = 0;
        for (size_t x = 0; x < nb.size(); ++x)
            for (size_t y = x + 1; y < nb.size(); ++y) {
                if (!g.has_edge(nb[x], nb[y])) continue;
                for (size_t z = y + 1; z < nb.size(); ++z)
                    if (g.has_edge(nb[x], nb[z]) && g.has_edge(nb[y], nb[z]))
                        ++triangles;
            }
        counts[v] = triangles;
    }
    return counts;
}

CospectralCertificate build_cospectral_pair(CoronaKind kind, const Graph& seed1,
                                            const Graph& seed2,
                                            const Graph& attachment,
                                            std::span<const double> alpha_grid,
                                            double tol, std::string seed1_name,
                                            std::string seed2_name,
                                            std::string attachment_name) {
    auto d1 = degree_info(seed1);
    auto d2 = degree_info(seed2);
    if (!d1.regular_degree || !d2.regular_degree)
        throw std::invalid_argument("cospectral seeds must be regular");
    if (seed1.vertex_count() != seed2.vertex_count() ||
        *d1.regular_degree != *d2.regular_degree)
        throw std::invalid_argument("cospectral seeds must share order and degree");
    auto a1 = sym_eigenvalues(adjacency_matrix(seed1));
    auto a2 = sym_eigenvalues(adjacency_matrix(seed2));
    if (!spectra_equal(a1, a2, 1e-8).equal)
        throw std::invalid_argument("cospectral seeds are not A-cospectral");

    CospectralCertificate cert;
    cert.kind = kind;
    cert.seed1_name = std::move(seed1_name);
    cert.seed2_name = std::move(seed2_name);
    cert.attachment = std::move(attachment_name);
    cert.alpha_grid.assign(alpha_grid.begin(), alpha_grid.end());
    cert.tol = tol;
    cert.tool_version = kVersion;

    const Graph c1 = compose(kind, seed1, attachment).graph;
    const Graph c2 = compose(kind, seed2, attachment).graph;
    double dev = 0.0;
    for (double av : alpha_grid) {
        const Alpha alpha(av);
        auto s1 = sym_eigenvalues(a_alpha_matrix(c1, alpha));
        auto s2 = sym_eigenvalues(a_alpha_matrix(c2, alpha));
        dev = std::max(dev, spectra_equal(s1, s2, tol).max_deviation);
    }
    // Stored rounded so that serialization round-trips exactly.
    cert.max_deviation = round_significant(dev);
    cert.passed = cert.max_deviation <= tol;
    return cert;
}

CoronalComparison coronal_equal_sampled(const Graph& h1, const Graph& h2,
                                        Alpha alpha,
                                        std::span<const double> lambda_samples,
                                        double tol) {
    const auto m1 = a_alpha_matrix(h1, alpha);
    const auto m2 = a_alpha_matrix(h2, alpha);
    double dev = 0.0;
    for (double lambda : lambda_samples)
        dev = std::max(dev, std::fabs(m_coronal(m1, lambda) - m_coronal(m2, lambda)));
    return {dev <= tol, dev};
}

std::string CospectralCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(kind));
    j["seed_names"] = {seed1_name, seed2_name};
    j["attachment"] = attachment;
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (double a : alpha_grid)
        grid.push_back(round_significant(a));
    j["alpha_grid"] = std::move(grid);
    j["tol"] = round_significant(tol);
    j["max_deviation"] = round_significant(max_deviation);
    j["passed"] = passed;
    j["tool_version"] = tool_version;
    return j.dump(2) + "\n";
}

CospectralCertificate CospectralCertificate::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CospectralCertificate cert;
    auto kind = corona_kind_from_string(j.at("kind").get<std::string>());
    if (!kind)
        throw std::invalid_argument("certificate: unknown kind");
    cert.kind = *kind;
    cert.seed1_name = j.at("seed_names").at(0).get<std::string>();
    cert.seed2_name = j.at("seed_names").at(1).get<std::string>();
    cert.attachment = j.at("attachment").get<std::string>();
    cert.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
    cert.tol = j.at("tol").get<double>();
    cert.max_deviation = j.at("max_deviation").get<double>();
    cert.passed = j.at("passed").get<bool>();
    cert.tool_version = j.at("tool_version").get<std::string>();
    return cert;
}

} // namespace corospec
