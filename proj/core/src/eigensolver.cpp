#include "corospec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corospec/errors.hpp"

namespace corospec {

namespace {

// Householder reduction of a symmetric matrix (row-major in `a`, destroyed)
// to tridiagonal form: diagonal in d, subdiagonal in e[1..n-1].
void tridiagonalize(std::vector<double>& a, int n,
                    std::vector<double>& d, std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k)
                scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k)
                        g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i)
        d[i] = A(i, i);
}

// Implicit-shift QL on a tridiagonal matrix; eigenvalues land in d.
// On entry e[1..n-1] holds the subdiagonal (e[0] unused).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i]; // renumber so e[i] couples d[i] and d[i+1]
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 64)
                    throw InvariantError("eigensolver: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> sym_eigenvalues_raw(const SymmetricMatrix& m) {
    const int n = m.order();
    if (n == 0)
        return {};
    std::vector<double> a(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[size_t(i) * n + j] = m.at(i, j);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = a[0];
    } else {
        tridiagonalize(a, n, d, e);
        ql_implicit(d, e, n);
        std::sort(d.begin(), d.end());
    }
    return d;
}

Spectrum sym_eigenvalues(const SymmetricMatrix& m) {
    return Spectrum::from_values(sym_eigenvalues_raw(m));
}

} // namespace corospec
