#pragma once

// Test-only oracles kept independent of the library's eigensolver and LU
// paths: integer power-trace moments and a cofactor-expansion inverse.

#include <cstdint>
#include <vector>

#include "corospec/graph.hpp"
#include "corospec/matrix.hpp"

namespace corospec::testing {

// tr(A^k) for k = 0..kmax via exact integer matrix powers. The first n+1
// moments determine an n-point eigenvalue multiset uniquely.
inline std::vector<std::int64_t> adjacency_trace_moments(const Graph& g, int kmax) {
    const int n = g.vertex_count();
    std::vector<std::int64_t> power(size_t(n) * n, 0), next(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        power[size_t(i) * n + i] = 1; // A^0
    std::vector<std::int64_t> adj(size_t(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        adj[size_t(u) * n + v] = 1;
        adj[size_t(v) * n + u] = 1;
    }
    std::vector<std::int64_t> moments;
    for (int k = 0; k <= kmax; ++k) {
        std::int64_t trace = 0;
        for (int i = 0; i < n; ++i)
            trace += power[size_t(i) * n + i];
        moments.push_back(trace);
        if (k == kmax) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += power[size_t(i) * n + l] * adj[size_t(l) * n + j];
                next[size_t(i) * n + j] = acc;
            }
        power.swap(next);
    }
    return moments;
}

// Determinant by recursive cofactor expansion (exact for small integer
// matrices, O(n!)). Test-only; n <= 8 or so.
inline double det_by_cofactors(const Matrix& m) {
    const int n = m.rows();
    if (n == 0) return 1.0;
    if (n == 1) return m(0, 0);
    double det = 0.0;
    double sign = 1.0;
    for (int col = 0; col < n; ++col) {
        Matrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        det += sign * m(0, col) * det_by_cofactors(minor);
        sign = -sign;
    }
    return det;
}

// Inverse via the adjugate. Test-only; independent of the LU solver.
inline Matrix inverse_by_cofactors(const Matrix& m) {
    const int n = m.rows();
    const double det = det_by_cofactors(m);
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            int ii = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int jj = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(ii, jj++) = m(r, c);
                }
                ++ii;
            }
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            inv(j, i) = sign * det_by_cofactors(minor) / det;
        }
    return inv;
}

} // namespace corospec::testing
