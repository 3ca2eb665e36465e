#include "corospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "corospec/eigensolver.hpp"
#include "corospec/errors.hpp"
#include "corospec/linsolve.hpp"

namespace corospec {

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (auto [u, v] : g.edges())
        a.set(u, v, 1.0);
    return a;
}

SymmetricMatrix degree_matrix(const Graph& g) {
    SymmetricMatrix d(g.vertex_count());
    auto deg = g.degrees();
    for (int i = 0; i < g.vertex_count(); ++i)
        d.set(i, i, double(deg[i]));
    return d;
}

Matrix incidence_matrix(const Graph& g) {
    Matrix r(g.vertex_count(), g.edge_count());
    const auto& edges = g.edges();
    for (int e = 0; e < g.edge_count(); ++e) {
        r(edges[e].first, e) = 1.0;
        r(edges[e].second, e) = 1.0;
    }
    return r;
}

SymmetricMatrix a_alpha_matrix(const Graph& g, Alpha alpha) {
    const double a = alpha.value();
    SymmetricMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges())
        m.set(u, v, 1.0 - a);
    auto deg = g.degrees();
    for (int i = 0; i < g.vertex_count(); ++i)
        m.set(i, i, a * deg[i]);
    return m;
}

double m_coronal(const SymmetricMatrix& m, double lambda, double pole_tol) {
    const int n = m.order();
    for (double ev : sym_eigenvalues_raw(m))
        if (std::fabs(lambda - ev) < pole_tol)
            throw PoleError("coronal pole: lambda=" + std::to_string(lambda) +
                            " is within " + std::to_string(pole_tol) +
                            " of eigenvalue " + std::to_string(ev));
    Matrix shifted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            shifted(i, j) = (i == j ? lambda : 0.0) - m.at(i, j);
    auto x = solve_linear(std::move(shifted), std::vector<double>(n, 1.0));
    double sum = 0.0;
    for (double v : x)
        sum += v;
    return sum;
}

double m_coronal_regular(int n, double row_sum, double lambda) {
    if (lambda == row_sum)
        throw PoleError("coronal pole: lambda equals the constant row sum");
    return double(n) / (lambda - row_sum);
}

double a_alpha_energy(const Graph& g, Alpha alpha) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("energy needs at least one vertex");
    const double shift =
        2.0 * alpha.value() * g.edge_count() / double(g.vertex_count());
    double energy = 0.0;
    for (double ev : sym_eigenvalues_raw(a_alpha_matrix(g, alpha)))
        energy += std::fabs(ev - shift);
    return energy;
}

Spectrum line_graph_spectrum_regular(const Spectrum& adjacency_spectrum,
                                     int n, int m, int r) {
    if (2 * m != n * r)
        throw std::invalid_argument("line-graph spectrum: need m = n*r/2, got n=" +
                                    std::to_string(n) + " m=" + std::to_string(m) +
                                    " r=" + std::to_string(r));
    if (adjacency_spectrum.size() != n)
        throw std::invalid_argument("line-graph spectrum: spectrum size != n");
    std::vector<double> values;
    values.reserve(m > n ? m : n);
    values.assign(m - n > 0 ? m - n : 0, -2.0);
    for (double ev : adjacency_spectrum.eigenvalues())
        values.push_back(ev + r - 2);
    // For m < n the -2 family has negative multiplicity: the shifted values
    // contain at least n-m entries equal to -2 (one per bipartite component)
    // and those cancel.
    for (int k = m; k < n; ++k) {
        auto it = std::find_if(values.begin(), values.end(), [](double v) {
            return std::fabs(v + 2.0) <= 1e-9;
        });
        if (it == values.end())
            throw std::invalid_argument("line-graph spectrum: inconsistent input "
                                        "spectrum for m < n");
        values.erase(it);
    }
    return Spectrum::from_values(std::move(values));
}

} // namespace corospec
