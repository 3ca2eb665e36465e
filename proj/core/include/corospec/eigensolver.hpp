#pragma once

#include "corospec/matrix.hpp"
#include "corospec/spectrum.hpp"

namespace corospec {

// All eigenvalues of a real symmetric matrix, ascending. Householder
// reduction to tridiagonal form followed by implicit-shift QL. Deterministic;
// accuracy is a small multiple of machine epsilon times the matrix norm.
Spectrum sym_eigenvalues(const SymmetricMatrix& m);

std::vector<double> sym_eigenvalues_raw(const SymmetricMatrix& m);

} // namespace corospec
