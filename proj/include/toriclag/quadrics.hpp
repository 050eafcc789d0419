#pragma once

#include <optional>
#include <vector>

#include "toriclag/lattice.hpp"
#include "toriclag/matrix.hpp"

namespace toriclag {

/// A system of Hermitian quadrics sum_k coeffs(j,k)*|z_k|^2 = rhs[j] on C^m.
/// The coefficient vectors of interest are the columns of coeffs.
struct QuadricSystem {
    int m = 0;
    RatMatrix coeffs;  // num_quadrics x m
    RatVec rhs;        // length num_quadrics

    int num_quadrics() const { return coeffs.rows(); }
    bool operator==(const QuadricSystem&) const = default;

    static QuadricSystem empty(int m) { return {m, RatMatrix(0, m), {}}; }
    /// Shape-checked constructor: coeffs.cols = m, rhs matches, and the
    /// quadric count never exceeds m.
    static QuadricSystem make(int m, RatMatrix coeffs, RatVec rhs);
};

/// The rhs lies in the cone spanned by the coefficient columns.
struct CondA {
    bool holds = false;
    RatVec witness;  // nonnegative y with coeffs * y = rhs, when holds
};

/// No subset of fewer than num_quadrics columns already spans the rhs.
struct CondB {
    bool holds = false;
    // When violated: a column subset whose cone contains rhs (the support of
    // the combination below; may be empty when rhs = 0), 0-based.
    std::vector<int> violating_subset;
    RatVec violating_combination;  // length m, zero outside the subset
};

/// Quotient-torus data derived from the column lattice L. L has rational
/// generators; scale is the denominator lcm, lattice_l holds scale*L.
struct LatticeData {
    IntLatticeBasis lattice_l;
    Int scale = 1;
    RatMatrix dual_basis;  // rows form a basis of the dual lattice L*
    int torus_rank = 0;
    Int two_group_order = 1;
};

/// The columns span a full-rank lattice in R^num_quadrics.
struct CondC {
    bool holds = false;
    int rank_found = 0;
    std::optional<LatticeData> lattice;  // present iff holds
};

struct ValidationVerdict {
    CondA cond_a;
    CondB cond_b;
    CondC cond_c;
    // Real dimension m + n of the quadric intersection, n = m - num_quadrics.
    std::optional<int> smooth_dim_z;

    bool all_pass() const { return cond_a.holds && cond_b.holds && cond_c.holds; }
};

CondA check_condition_a(const QuadricSystem& sys);
CondB check_condition_b(const QuadricSystem& sys);
CondC check_condition_c(const QuadricSystem& sys);
ValidationVerdict validate(const QuadricSystem& sys);

/// Vertical concatenation: gamma rows first, then delta rows.
QuadricSystem stack(const QuadricSystem& gamma, const QuadricSystem& delta);

}  // namespace toriclag
