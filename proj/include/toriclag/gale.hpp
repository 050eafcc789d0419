#pragma once

#include <vector>

#include "toriclag/lattice.hpp"
#include "toriclag/quadrics.hpp"

namespace toriclag {

/// Dual description of the solution set {y >= 0 : coeffs*y = rhs}: the affine
/// parametrization y_i = <a_i, x> + b_i identifies it with the polyhedron
/// P = {x in R^n : <a_i, x> + b_i >= 0}.
struct GaleDual {
    int m = 0;
    int n = 0;                      // m - num_quadrics
    std::vector<IntVec> a_vectors;  // m vectors in Z^n
    RatVec b_offsets;               // length m
    IntLatticeBasis lambda;         // lattice spanned by the a_i
};

/// Requires full row rank and a solvable system (conditions the caller has
/// already validated); throws std::runtime_error otherwise.
GaleDual gale_dual(const QuadricSystem& sys);

struct PolyVertex {
    RatVec point;             // in Q^n
    std::vector<int> active;  // sorted 0-based indices of tight inequalities
};

struct Polyhedron {
    GaleDual gale;
    std::vector<PolyVertex> vertices;  // sorted by active set
    bool is_simple = false;            // every vertex has exactly n tight inequalities
    bool is_bounded = false;           // recession cone is {0}
};

/// Exact vertex enumeration over all n-subsets of the inequalities, plus
/// simplicity and boundedness flags. Uses the parallel enumerator.
Polyhedron build_polyhedron(const GaleDual& gd);

std::vector<PolyVertex> enumerate_vertices_serial(const GaleDual& gd);
std::vector<PolyVertex> enumerate_vertices_parallel(const GaleDual& gd);

}  // namespace toriclag
