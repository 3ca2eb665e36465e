#pragma once

#include "corospec/alpha.hpp"
#include "corospec/graph.hpp"
#include "corospec/matrix.hpp"
#include "corospec/spectrum.hpp"

namespace corospec {

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix degree_matrix(const Graph& g);

// n x m vertex-edge incidence matrix in canonical edge order. Satisfies
// R*R^T = A + D and R^T*R = B(line graph) + 2I with exact integer entries.
Matrix incidence_matrix(const Graph& g);

// alpha*D + (1-alpha)*A.
SymmetricMatrix a_alpha_matrix(const Graph& g, Alpha alpha);

// Coronal of M at lambda: sum of the entries of (lambda*I - M)^{-1}.
// Throws PoleError when lambda is within pole_tol of an eigenvalue of M.
double m_coronal(const SymmetricMatrix& m, double lambda, double pole_tol = 1e-8);

// Closed form n/(lambda - row_sum) for matrices with constant row sums.
double m_coronal_regular(int n, double row_sum, double lambda);

// Sum over the spectrum of |lambda_i - 2*alpha*m/n|.
double a_alpha_energy(const Graph& g, Alpha alpha);

// Adjacency spectrum of the line graph of an r-regular graph with n vertices
// and m edges: {-2 with multiplicity m-n} plus {lambda_i + r - 2}.
Spectrum line_graph_spectrum_regular(const Spectrum& adjacency_spectrum,
                                     int n, int m, int r);

} // namespace corospec
