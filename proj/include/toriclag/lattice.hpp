#pragma once

#include <optional>
#include <vector>

#include "toriclag/matrix.hpp"

namespace toriclag {

/// Basis of a sublattice of Z^dim, rows in Hermite normal form. covolume is
/// the lattice index [Z^dim : L] when the lattice has full rank, else unset.
struct IntLatticeBasis {
    int dim = 0;
    std::vector<IntVec> basis;  // each of length dim
    std::optional<Int> covolume;

    int lattice_rank() const { return static_cast<int>(basis.size()); }
};

/// Row Hermite normal form of the integer span of the given rows. Pivots are
/// positive, entries above each pivot lie in [0, pivot), zero rows dropped.
IntLatticeBasis hnf(const std::vector<IntVec>& rows, int dim);

/// Hermite normal form with transform: U * rows = hnf rows followed by zero
/// rows, U unimodular. Returns {hnf rows (zero rows kept in place at the
/// bottom), U}.
struct HnfWithTransform {
    std::vector<IntVec> h;  // row count preserved, zero rows at the bottom
    std::vector<IntVec> u;  // square, |det| = 1
    int nonzero_rows = 0;
};
HnfWithTransform hnf_with_transform(const std::vector<IntVec>& rows, int dim);

/// Basis of the saturated integer kernel {v in Z^cols : M v = 0} of a rational
/// matrix, in Hermite normal form. Saturated: any integer vector in the
/// rational kernel is an integer combination of the basis.
IntLatticeBasis integer_kernel_basis(const RatMatrix& m);

/// True iff v lies in the lattice spanned by the basis.
bool lattice_contains(const IntLatticeBasis& l, const IntVec& v);

/// Rows of the dual basis of a full-rank square rational basis: row i of the
/// result pairs to delta_{ij} with row j of m. Throws if m is not square and
/// invertible.
RatMatrix dual_lattice_basis(const RatMatrix& m);

}  // namespace toriclag
