#pragma once

#include <vector>

#include "corospec/matrix.hpp"

namespace corospec {

// Determinant via LU with partial pivoting. Returns 0 on exact singularity.
double determinant(Matrix a);

// Solves a*x = b. Throws std::domain_error when a is numerically singular.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

} // namespace corospec
