#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclag/delzant.hpp"

namespace toriclag {

enum class SpecialCase { ambient_cm, real_points, projective, general };

const char* special_case_name(SpecialCase c);

/// Real dimensions of every space in the two-system construction.
struct ConstructionDims {
    int z_gamma = 0;  // m + n
    int v = 0;        // 2n
    int s = 0;        // n + ell - m
    int n = 0;        // half of v
    int v_hat = 0;    // 2(n + ell - m)
    int n_hat = 0;    // n + ell - m
};

struct ConstructionTorus {
    int t_gamma_rank = 0;  // m - n
    int t_delta_rank = 0;  // m - ell
    Int d_gamma_order = 1;  // 2^(m-n)
    Int d_delta_order = 1;  // 2^(m-ell)
};

/// One named reason the construction is rejected, e.g. {"stacked", "b"} or
/// {"gamma", "delzant"} or {"pair", "dim_s_negative"}.
struct ConstructionFailure {
    std::string system;
    std::string condition;
};

struct SystemVerdicts {
    // False only for a stacked system that was never formed because the pair
    // has more quadrics than coordinates (dim S < 0).
    bool checked = false;
    ValidationVerdict validation;
    std::optional<Polyhedron> polyhedron;    // present iff validation passed and polyhedral work ran
    std::optional<DelzantVerdict> delzant;   // same
};

struct ConstructionReport {
    int m = 0;
    int n = 0;    // m - gamma quadric count
    int ell = 0;  // m - delta quadric count
    SystemVerdicts gamma, delta, stacked;
    std::optional<ConstructionDims> dims;  // present iff valid
    ConstructionTorus torus;
    SpecialCase special_case = SpecialCase::general;
    std::vector<ConstructionFailure> failures;

    bool valid() const { return failures.empty(); }
};

/// Validates gamma, delta, and the stacked system, checks all three Delzant
/// polyhedra, and fills in every dimension. Collects named failures instead
/// of throwing; only an ambient-dimension mismatch throws.
ConstructionReport build_construction(const QuadricSystem& gamma, const QuadricSystem& delta);

/// Deterministic multi-line human-readable rendering.
std::string report_text(const ConstructionReport& rep);

}  // namespace toriclag
