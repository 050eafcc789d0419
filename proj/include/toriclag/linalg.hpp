#pragma once

#include <optional>
#include <vector>

#include "toriclag/matrix.hpp"

namespace toriclag {

/// Row-reduces in place to reduced row echelon form (leftmost pivots, pivot
/// entries 1, zeros above and below). Returns pivot column indices in order.
std::vector<int> rref(RatMatrix& m);

int rank(const RatMatrix& m);

/// Determinant of a square matrix by Gaussian elimination. Exact.
Rat determinant(const RatMatrix& m);

/// Solves A x = b. Returns the canonical solution with all free variables set
/// to zero, or nullopt if the system is inconsistent.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

/// Basis of the right kernel {x : A x = 0}, one vector per free column in
/// ascending column order. Each vector has a 1 in its free coordinate.
std::vector<RatVec> rational_kernel_basis(const RatMatrix& a);

}  // namespace toriclag
