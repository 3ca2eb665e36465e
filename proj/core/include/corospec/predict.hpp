#pragma once

#include <span>
#include <string>
#include <vector>

#include "corospec/alpha.hpp"
#include "corospec/corona.hpp"
#include "corospec/graph.hpp"
#include "corospec/spectrum.hpp"

namespace corospec {

// Regular graph summarized by order, degree and adjacency spectrum.
struct RegularSpec {
    int n = 0;
    int r = 0;
    std::vector<double> adjacency_eigenvalues; // ascending

    // Computes the spectrum numerically; throws when g is not regular.
    static RegularSpec from_graph(const Graph& g);
};

struct PredictedFamily {
    std::string description;
    std::vector<double> values; // emitted once per multiplicity
    int multiplicity = 1;

    int count() const { return static_cast<int>(values.size()) * multiplicity; }
};

struct PredictionReport {
    CoronaKind kind;
    double alpha = 0.0;
    std::vector<PredictedFamily> families;
    Spectrum total;
};

// True for the six kinds with a closed-form spectrum (every kind except the
// plain corona and plain neighbourhood corona).
bool has_closed_form(CoronaKind kind);

// Assembles the full predicted A_alpha spectrum of the composite of two
// regular graphs from eigenvalue families plus per-base-eigenvalue cubic
// factors. The assembled multiset size always equals the composite order;
// a mismatch throws InvariantError.
PredictionReport predict_spectrum(CoronaKind kind, const RegularSpec& g1,
                                  const RegularSpec& g2, Alpha alpha);

// Evaluates the closed-form characteristic polynomial of the composite at
// lambda, valid for regular g1 and arbitrary g2 (the copy contribution enters
// through the coronal of A_alpha(g2)). Matches det(lambda*I - A_alpha) of the
// composed graph.
double eval_closed_form_charpoly(CoronaKind kind, const Graph& g1,
                                 const Graph& g2, Alpha alpha, double lambda);

enum class VerifyMode { spectrum, charpoly };

struct VerifyCell {
    double alpha = 0.0;
    double max_deviation = 0.0;
};

struct VerifyReport {
    CoronaKind kind;
    VerifyMode mode = VerifyMode::spectrum;
    double tol = 0.0;
    std::vector<VerifyCell> cells; // one per alpha
    double max_deviation = 0.0;
    bool passed = false;
};

// spectrum mode: sorted-multiset comparison of predict_spectrum against the
// eigendecomposition of the composed graph (both operands must be regular).
// charpoly mode: relative deviation of eval_closed_form_charpoly against the
// determinant of lambda*I - A_alpha at sample points beyond the spectral
// radius (g2 may be arbitrary).
VerifyReport verify_prediction(CoronaKind kind, const Graph& g1, const Graph& g2,
                               std::span<const double> alpha_grid, double tol,
                               VerifyMode mode = VerifyMode::spectrum);

} // namespace corospec
