#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corospec/alpha.hpp"
#include "corospec/corona.hpp"
#include "corospec/graph.hpp"
#include "corospec/spectrum.hpp"

namespace corospec {

// Catalog of verified A-cospectral regular seed pairs. The loader rebuilds
// both graphs and re-checks their adjacency spectra instead of trusting
// stored values. Known keys: "shrikhande_rook4".
std::pair<Graph, Graph> known_regular_cospectral_pair(std::string_view key);

// Human-readable names of the two members of a catalog pair.
std::pair<std::string, std::string> catalog_seed_names(std::string_view key);

Graph shrikhande_graph(); // Cayley graph on Z4 x Z4, 16 vertices, 6-regular
Graph rook4_graph();      // 4x4 rook's graph, 16 vertices, 6-regular

// Number of 4-cliques through each vertex. Cheap local invariant; the two
// catalog seeds have constant values 0 and 2 respectively.
std::vector<int> clique4_counts(const Graph& g);

struct CospectralCertificate {
    CoronaKind kind = CoronaKind::total;
    std::string seed1_name;
    std::string seed2_name;
    std::string attachment;
    std::vector<double> alpha_grid;
    double tol = 0.0;
    double max_deviation = 0.0;
    bool passed = false;
    std::string tool_version;

    std::string to_json() const; // deterministic field order and formatting
    static CospectralCertificate from_json(const std::string& text);

    bool operator==(const CospectralCertificate&) const = default;
};

// Composes both seeds with the attachment and compares the A_alpha spectra
// across the grid. Seeds must be regular of equal order and degree and
// A-cospectral (re-checked here); the attachment may be any graph.
CospectralCertificate build_cospectral_pair(CoronaKind kind, const Graph& seed1,
                                            const Graph& seed2,
                                            const Graph& attachment,
                                            std::span<const double> alpha_grid,
                                            double tol,
                                            std::string seed1_name = "g1",
                                            std::string seed2_name = "g2",
                                            std::string attachment_name = "h");

struct CoronalComparison {
    bool equal = false;
    double max_deviation = 0.0;
};

// Samples the coronals of A_alpha(h1) and A_alpha(h2) at the given points.
// Throws PoleError if a sample sits on a pole of either coronal.
CoronalComparison coronal_equal_sampled(const Graph& h1, const Graph& h2,
                                        Alpha alpha,
                                        std::span<const double> lambda_samples,
                                        double tol = 1e-8);

} // namespace corospec
