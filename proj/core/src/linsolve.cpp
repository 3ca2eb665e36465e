#include "corospec/linsolve.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace corospec {

namespace {

// In-place LU with partial pivoting; fills piv with row swaps and returns the
// permutation sign, or 0 when a zero pivot column is met.
int lu_decompose(Matrix& a, std::vector<int>& piv) {
    const int n = a.rows();
    piv.resize(n);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::fabs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::fabs(a(i, k)) > best) {
                best = std::fabs(a(i, k));
                p = i;
            }
        }
        piv[k] = p;
        if (best == 0.0)
            return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        const double inv = 1.0 / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = a(i, k) * inv;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return sign;
}

} // namespace

double determinant(Matrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant needs a square matrix");
    if (a.rows() == 0)
        return 1.0;
    std::vector<int> piv;
    int sign = lu_decompose(a, piv);
    if (sign == 0)
        return 0.0;
    double det = sign;
    for (int i = 0; i < a.rows(); ++i)
        det *= a(i, i);
    return det;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear shape mismatch");
    std::vector<int> piv;
    if (lu_decompose(a, piv) == 0)
        throw std::domain_error("solve_linear: singular matrix");
    for (int k = 0; k < n; ++k)
        std::swap(b[k], b[piv[k]]);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            b[i] -= a(i, j) * b[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j)
            b[i] -= a(i, j) * b[j];
        b[i] /= a(i, i);
    }
    return b;
}

} // namespace corospec
