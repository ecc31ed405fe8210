#pragma once

#include <vector>

#include "fgm/linalg/matrix.hpp"

namespace fgm {

// Singular values of a dense matrix via one-sided Jacobi (Hestenes) row
// orthogonalization, descending order. High relative accuracy, no external
// dependencies; sizes here stay in the low hundreds.
std::vector<double> singular_values(const Matrix& m);

}  // namespace fgm
