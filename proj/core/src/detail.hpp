#pragma once

#include <optional>

#include "mcat/complex_matrix.hpp"

namespace mcat::detail {

// Gaussian elimination with partial pivoting; nullopt when a pivot vanishes.
std::optional<ComplexMatrix> gauss_inverse(const ComplexMatrix& m);

// Replace columns [filled, cols) with unit vectors orthogonal to all columns
// before them. Columns [0, filled) must already be orthonormal.
void complete_orthonormal_columns(ComplexMatrix& u, std::size_t filled);

}  // namespace mcat::detail
