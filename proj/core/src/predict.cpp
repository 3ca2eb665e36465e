#include "corospec/predict.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "corospec/eigensolver.hpp"
#include "corospec/errors.hpp"
#include "corospec/linsolve.hpp"
#include "corospec/polynomial.hpp"
#include "corospec/spectra.hpp"

namespace corospec {

RegularSpec RegularSpec::from_graph(const Graph& g) {
    auto info = degree_info(g);
    if (!info.regular_degree)
        throw std::invalid_argument("RegularSpec: graph is not regular");
    RegularSpec spec;
    spec.n = g.vertex_count();
    spec.r = *info.regular_degree;
    spec.adjacency_eigenvalues = sym_eigenvalues_raw(adjacency_matrix(g));
    std::sort(spec.adjacency_eigenvalues.begin(), spec.adjacency_eigenvalues.end());
    return spec;
}

bool has_closed_form(CoronaKind kind) {
    return kind != CoronaKind::corona && kind != CoronaKind::neighbourhood;
}

namespace {

using Poly = RealPolynomial;

Poly lin(double c0) { return Poly::linear(c0, 1.0); } // monic linear x + c0

std::string short_num(double v) {
    if (std::fabs(v) < 1e-9)
        v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Params {
    double a;  // alpha
    double b;  // 1 - alpha
    int n1, r1, m1;
    int n2, r2;
    double s;  // copy diagonal shift: alpha, or alpha*r1 for the
               // splitting-neighbourhood kind
};

// Cleared cubic factor for one adjacency eigenvalue of the base graph.
// L is the cleared coronal denominator (x - s - r2).
Poly cleared_cubic(CoronaKind kind, const Params& q, double ev) {
    const double a = q.a, b = q.b;
    const double n2 = q.n2;
    const Poly L = lin(-q.s - q.r2);
    const double w = ev + q.r1;
    switch (kind) {
        case CoronaKind::total: {
            const Poly c = lin(-2.0 * (a * q.r1 - 1.0 + a));
            const Poly pt = lin(-(3.0 * q.r1 + n2) * a + q.r1 - b * w);
            const Poly quad = L * pt - Poly({b * b * n2});
            return (c - Poly({b * w})) * quad - L.scaled(b * b * w);
        }
        case CoronaKind::q_vertex: {
            const Poly c = lin(-2.0 * a * q.r1 + 2.0 * b);
            const Poly quad = L * lin(-a * (q.r1 + n2)) - Poly({b * b * n2});
            return quad * (c - Poly({b * w})) - L.scaled(b * b * w);
        }
        case CoronaKind::q_edge: {
            const Poly t = lin(-a * q.r1);
            const Poly quad = L * lin(-a * (2.0 * q.r1 + n2)) - Poly({b * b * n2});
            return t * quad + (t * L).scaled(2.0 * b) -
                   ((t + Poly({b})) * L).scaled(b * w);
        }
        case CoronaKind::splitting: {
            const Poly t = lin(-a * q.r1);
            return L * t * lin(-(2.0 * q.r1 + n2) * a - b * ev) -
                   t.scaled(b * b * n2) - L.scaled(b * b * ev * ev);
        }
        case CoronaKind::splitting_add_vertex: {
            const Poly quad = L * lin(-(q.r1 + n2) * a) - Poly({b * b * n2});
            return lin(-2.0 * a * q.r1 - b * ev) * quad - L.scaled(b * b * ev * ev);
        }
        case CoronaKind::splitting_neighbourhood: {
            const Poly t = lin(-a * q.r1);
            const Poly inner =
                L * lin(-(n2 + 2.0) * q.r1 * a - b * ev) - Poly({b * b * n2 * ev * ev});
            return t * inner - L.scaled(b * b * ev * ev);
        }
        default:
            throw std::invalid_argument("no closed form for kind " +
                                        std::string(to_string(kind)));
    }
}

// Quadratic left over at base eigenvalue -r1 for the incidence-based kinds
// when m1 < n1 (the linear kernel factor cancels there).
Poly degenerate_quadratic(CoronaKind kind, const Params& q) {
    const double a = q.a, b = q.b;
    const double n2 = q.n2;
    const Poly L = lin(-q.s - q.r2);
    switch (kind) {
        case CoronaKind::total:
            return L * lin(-(3.0 * q.r1 + n2) * a + q.r1) - Poly({b * b * n2});
        case CoronaKind::q_vertex:
            return L * lin(-a * (q.r1 + n2)) - Poly({b * b * n2});
        case CoronaKind::q_edge:
            // aux quadratic: B2 + 2(1-alpha) L
            return L * lin(-a * (2.0 * q.r1 + n2)) - Poly({b * b * n2}) +
                   L.scaled(2.0 * b);
        default:
            throw InvariantError("degenerate quadratic only exists for "
                                 "incidence-based kinds");
    }
}

std::vector<double> solve_expect(const Poly& p, int expected, CoronaKind kind,
                                 const std::string& family) {
    auto roots = solve_real_polynomial(p);
    if (static_cast<int>(roots.size()) != expected)
        throw InvariantError("closed-form family '" + family + "' for " +
                             std::string(to_string(kind)) + " produced " +
                             std::to_string(roots.size()) + " real roots, expected " +
                             std::to_string(expected));
    return roots;
}

int composite_order(CoronaKind kind, int n1, int m1, int n2) {
    switch (kind) {
        case CoronaKind::total:
        case CoronaKind::q_vertex: return n1 + m1 + n1 * n2;
        case CoronaKind::q_edge: return n1 + m1 + m1 * n2;
        default: return 2 * n1 + n1 * n2; // splitting kinds
    }
}

} // namespace

PredictionReport predict_spectrum(CoronaKind kind, const RegularSpec& g1,
                                  const RegularSpec& g2, Alpha alpha) {
    if (!has_closed_form(kind))
        throw std::invalid_argument("predict_spectrum: no closed form for kind " +
                                    std::string(to_string(kind)));
    if (static_cast<int>(g1.adjacency_eigenvalues.size()) != g1.n ||
        static_cast<int>(g2.adjacency_eigenvalues.size()) != g2.n)
        throw std::invalid_argument("predict_spectrum: spectrum size mismatch");
    const int n1 = g1.n, r1 = g1.r, m1 = n1 * r1 / 2;
    const int n2 = g2.n, r2 = g2.r;
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("predict_spectrum: both operands must be nonempty");
    const bool incidence_kind = kind == CoronaKind::total ||
                                kind == CoronaKind::q_vertex ||
                                kind == CoronaKind::q_edge;
    if (incidence_kind && m1 == 0)
        throw std::invalid_argument("predict_spectrum: " +
                                    std::string(to_string(kind)) +
                                    " needs at least one base edge");

    Params q{alpha.value(), 1.0 - alpha.value(), n1, r1, m1, n2, r2, 0.0};
    q.s = kind == CoronaKind::splitting_neighbourhood ? q.a * r1 : q.a;

    PredictionReport report;
    report.kind = kind;
    report.alpha = q.a;

    const int copy_mult = kind == CoronaKind::q_edge ? m1 : n1;

    // Copy families: A_alpha(G2) eigenvalues shifted by s, one instance of the
    // top eigenvalue (the constant row sum r2) consumed by the coronal.
    std::vector<double> nu;
    for (double mu : g2.adjacency_eigenvalues)
        nu.push_back(q.a * r2 + q.b * mu);
    std::sort(nu.begin(), nu.end());
    nu.pop_back();
    if (!nu.empty()) {
        PredictedFamily fam;
        fam.description = kind == CoronaKind::splitting_neighbourhood
                              ? "alpha*r1 + lambda_j(A_alpha(G2)), j>=2"
                              : "alpha + lambda_j(A_alpha(G2)), j>=2";
        for (double v : nu)
            fam.values.push_back(q.s + v);
        fam.multiplicity = copy_mult;
        report.families.push_back(std::move(fam));
    }

    // Kernel family from the incidence reduction (only when m1 > n1).
    if (incidence_kind && m1 > n1) {
        PredictedFamily fam;
        fam.multiplicity = m1 - n1;
        switch (kind) {
            case CoronaKind::total:
                fam.description = "edge kernel 2(alpha*r1 - 1 + alpha)";
                fam.values = {2.0 * (q.a * r1 - 1.0 + q.a)};
                break;
            case CoronaKind::q_vertex:
                fam.description = "edge kernel 2*alpha*r1 - 2(1 - alpha)";
                fam.values = {2.0 * q.a * r1 - 2.0 * q.b};
                break;
            case CoronaKind::q_edge:
                fam.description = "aux quadratic kernel";
                fam.values = solve_expect(degenerate_quadratic(kind, q), 2, kind,
                                          fam.description);
                break;
            default: break;
        }
        report.families.push_back(std::move(fam));
    }
    // With fewer edges than vertices (1-regular base) the incidence kernel
    // flips: the q-edge kind gains an explicit alpha*r1 family and the cubic
    // at base eigenvalue -r1 degenerates.
    const bool flipped = incidence_kind && m1 < n1;
    if (flipped && kind == CoronaKind::q_edge) {
        PredictedFamily fam;
        fam.description = "vertex kernel alpha*r1";
        fam.values = {q.a * r1};
        fam.multiplicity = n1 - m1;
        report.families.push_back(std::move(fam));
    }

    // One factor per distinct base adjacency eigenvalue, roots emitted with
    // the eigenvalue's multiplicity.
    const auto groups = Spectrum::from_values(g1.adjacency_eigenvalues).groups();
    int degenerate_seen = 0;
    for (const auto& grp : groups) {
        const bool at_minus_r1 = std::fabs(grp.value + r1) <= 1e-6;
        PredictedFamily fam;
        fam.multiplicity = grp.multiplicity;
        if (flipped && at_minus_r1) {
            degenerate_seen += grp.multiplicity;
            if (kind == CoronaKind::q_edge)
                continue; // fully absorbed by the vertex kernel family
            fam.description = "quadratic factor at base eigenvalue " +
                              short_num(grp.value);
            fam.values = solve_expect(degenerate_quadratic(kind, q), 2, kind,
                                      fam.description);
        } else {
            fam.description = "cubic factor at base eigenvalue " +
                              short_num(grp.value);
            fam.values = solve_expect(cleared_cubic(kind, q, grp.value), 3, kind,
                                      fam.description);
        }
        report.families.push_back(std::move(fam));
    }
    if (flipped && degenerate_seen != n1 - m1)
        throw InvariantError("closed-form assembly: expected " +
                             std::to_string(n1 - m1) +
                             " base eigenvalues at -r1, found " +
                             std::to_string(degenerate_seen));

    std::vector<double> all;
    for (const auto& fam : report.families)
        for (int k = 0; k < fam.multiplicity; ++k)
            all.insert(all.end(), fam.values.begin(), fam.values.end());
    const int expected = composite_order(kind, n1, m1, n2);
    if (static_cast<int>(all.size()) != expected)
        throw InvariantError("closed-form assembly for " +
                             std::string(to_string(kind)) + " produced " +
                             std::to_string(all.size()) + " eigenvalues, expected " +
                             std::to_string(expected));
    report.total = Spectrum::from_values(std::move(all));
    return report;
}

double eval_closed_form_charpoly(CoronaKind kind, const Graph& g1,
                                 const Graph& g2, Alpha alpha, double lambda) {
    if (!has_closed_form(kind))
        throw std::invalid_argument("eval_closed_form_charpoly: no closed form "
                                    "for kind " + std::string(to_string(kind)));
    auto info1 = degree_info(g1);
    if (!info1.regular_degree)
        throw std::invalid_argument("eval_closed_form_charpoly: base graph must "
                                    "be regular");
    const int n1 = g1.vertex_count(), m1 = g1.edge_count();
    const int r1 = *info1.regular_degree;
    const int n2 = g2.vertex_count();
    const double a = alpha.value(), b = 1.0 - a;
    const double s = kind == CoronaKind::splitting_neighbourhood ? a * r1 : a;
    const bool incidence_kind = kind == CoronaKind::total ||
                                kind == CoronaKind::q_vertex ||
                                kind == CoronaKind::q_edge;
    if (incidence_kind && m1 == 0)
        throw std::invalid_argument("eval_closed_form_charpoly: " +
                                    std::string(to_string(kind)) +
                                    " needs at least one base edge");

    const auto base_eigs = sym_eigenvalues_raw(adjacency_matrix(g1));
    const auto a2 = a_alpha_matrix(g2, alpha);
    const auto copy_eigs = sym_eigenvalues_raw(a2);
    const double gamma = n2 > 0 ? m_coronal(a2, lambda - s) : 0.0;

    const int copy_mult = kind == CoronaKind::q_edge ? m1 : n1;
    double result = 1.0;
    for (double mu : copy_eigs)
        for (int k = 0; k < copy_mult; ++k)
            result *= lambda - s - mu;

    auto pow_int = [](double base, int e) {
        if (e < 0 && base == 0.0)
            throw PoleError("charpoly kernel factor vanishes at lambda");
        double r = 1.0;
        for (int k = 0; k < std::abs(e); ++k)
            r = e > 0 ? r * base : r / base;
        return r;
    };

    switch (kind) {
        case CoronaKind::total: {
            const double c = lambda - 2.0 * (a * r1 - 1.0 + a);
            result *= pow_int(c, m1 - n1);
            for (double ev : base_eigs) {
                const double w = ev + r1;
                const double p = lambda - (3.0 * r1 + n2) * a + r1 - b * w -
                                 b * b * gamma;
                result *= (c - b * w) * p - b * b * w;
            }
            break;
        }
        case CoronaKind::q_vertex: {
            const double c = lambda - 2.0 * a * r1 + 2.0 * b;
            const double av = lambda - a * (r1 + n2) - b * b * gamma;
            result *= pow_int(c, m1 - n1);
            for (double ev : base_eigs) {
                const double w = ev + r1;
                result *= av * (c - b * w) - b * b * w;
            }
            break;
        }
        case CoronaKind::q_edge: {
            const double t = lambda - a * r1;
            const double f0 =
                t * (lambda - a * (2.0 * r1 + n2) - b * b * gamma) + 2.0 * b * t;
            result *= pow_int(t, n1 - m1);
            result *= pow_int(f0, m1 - n1);
            for (double ev : base_eigs) {
                const double w = ev + r1;
                result *= f0 - b * (t + b) * w;
            }
            break;
        }
        case CoronaKind::splitting: {
            const double t = lambda - a * r1;
            for (double ev : base_eigs)
                result *= t * (lambda - (2.0 * r1 + n2) * a - b * b * gamma - b * ev) -
                          b * b * ev * ev;
            break;
        }
        case CoronaKind::splitting_add_vertex: {
            const double av = lambda - (r1 + n2) * a - b * b * gamma;
            for (double ev : base_eigs)
                result *= (lambda - 2.0 * a * r1 - b * ev) * av - b * b * ev * ev;
            break;
        }
        case CoronaKind::splitting_neighbourhood: {
            const double t = lambda - a * r1;
            for (double ev : base_eigs)
                result *= t * (lambda - (n2 + 2.0) * r1 * a - b * ev -
                               b * b * gamma * ev * ev) -
                          b * b * ev * ev;
            break;
        }
        default: break;
    }
    return result;
}

VerifyReport verify_prediction(CoronaKind kind, const Graph& g1, const Graph& g2,
                               std::span<const double> alpha_grid, double tol,
                               VerifyMode mode) {
    VerifyReport report;
    report.kind = kind;
    report.mode = mode;
    report.tol = tol;

    const Composite composite = compose(kind, g1, g2);
    RegularSpec spec1, spec2;
    if (mode == VerifyMode::spectrum) {
        spec1 = RegularSpec::from_graph(g1);
        spec2 = RegularSpec::from_graph(g2);
    }

    for (double av : alpha_grid) {
        const Alpha alpha(av);
        const auto matrix = a_alpha_matrix(composite.graph, alpha);
        const auto oracle = sym_eigenvalues(matrix);
        double dev = 0.0;
        if (mode == VerifyMode::spectrum) {
            const auto predicted = predict_spectrum(kind, spec1, spec2, alpha);
            if (predicted.total.size() != oracle.size())
                throw InvariantError("verify: prediction size mismatch");
            for (int i = 0; i < oracle.size(); ++i)
                dev = std::max(dev, std::fabs(predicted.total.eigenvalues()[i] -
                                              oracle.eigenvalues()[i]));
        } else {
            // Relative charpoly deviation at 10 deterministic samples beyond
            // the spectral radius.
            std::mt19937 rng(0x5eedu);
            const double radius = oracle.spectral_radius();
            for (int k = 0; k < 10; ++k) {
                const double u = double(rng()) / 4294967296.0;
                const double lambda = radius + 1.0 + 9.0 * u;
                Matrix shifted(oracle.size(), oracle.size());
                for (int i = 0; i < oracle.size(); ++i)
                    for (int j = 0; j < oracle.size(); ++j)
                        shifted(i, j) =
                            (i == j ? lambda : 0.0) - matrix.at(i, j);
                const double det = determinant(std::move(shifted));
                const double pred =
                    eval_closed_form_charpoly(kind, g1, g2, alpha, lambda);
                const double denom = std::max(std::fabs(det), DBL_MIN);
                dev = std::max(dev, std::fabs(pred - det) / denom);
            }
        }
        report.cells.push_back({av, dev});
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.passed = report.max_deviation <= tol;
    return report;
}

} // namespace corospec
