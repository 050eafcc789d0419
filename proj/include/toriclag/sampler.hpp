#pragma once

#include <complex>
#include <vector>

#include "toriclag/construction.hpp"

namespace toriclag {

struct Tolerances {
    double tol_omega = 1e-8;        // max allowed unit-normalized symplectic pairing
    double tol_rank = 1e-8;         // min allowed singular value ratio of the frame
    double interior_margin = 1e-3;  // min allowed coordinate of sampled y
};

using Cplx = std::complex<double>;
using CplxVec = std::vector<Cplx>;

/// One sampled point of the real intersection locus, lifted to C^m.
struct SamplePoint {
    std::vector<double> u;         // length m, u_k = signs_k * sqrt(y_k)
    RatVec y;                      // length m, exact solution of the stacked system
    std::vector<int> signs;        // length m, in {-1,+1}
    std::vector<double> phi_gamma; // length = gamma quadric count
    std::vector<double> phi_delta; // length = delta quadric count
    CplxVec z;                     // length m, filled by lift_point
};

struct SampleCertificate {
    double max_symplectic_pairing = 0;    // over unit-normalized frame pairs
    double min_singular_value_ratio = 0;  // sigma_min / sigma_max of the frame
    bool lagrangian_pass = false;
    bool immersion_pass = false;
};

struct BatchSummary {
    int count = 0;
    double pass_fraction = 1.0;
    double worst_pairing = 0;     // max pairing over the batch
    double worst_rank_ratio = 0;  // min ratio over the batch (0 for empty batch)
};

/// Everything the sampling pipeline needs, precomputed once per pair:
/// validated systems, the stacked polyhedron, its vertices pushed forward to
/// y-space, and an exact kernel basis of the stacked coefficients.
struct SampleContext {
    QuadricSystem gamma, delta, stacked;
    Polyhedron poly;                 // of the stacked system
    std::vector<RatVec> y_vertices;  // y = A*v + b per polyhedron vertex
    std::vector<RatVec> kernel;      // rational kernel basis of stacked.coeffs
};

/// Throws std::runtime_error when the pair fails build_construction.
SampleContext make_sample_context(const QuadricSystem& gamma, const QuadricSystem& delta);

/// Deterministic given seed. Proposal j gets its own generator keyed by
/// (seed, j); a sample is the next accepted proposal in index order, so the
/// output is independent of batching. Throws when the margin rejects the
/// first 10000 proposals outright or accepts too rarely to finish.
std::vector<SamplePoint> sample_points(const SampleContext& ctx, int count, unsigned long long seed,
                                       double interior_margin);

/// Fills z_k = u_k * exp(2*pi*i*(<gamma_k, phi_gamma> + <delta_k, phi_delta>))
/// with gamma_k, delta_k the k-th coefficient columns.
void lift_point(const SampleContext& ctx, SamplePoint& p);

/// Tangent frame of the lifted manifold at p: first the real-stratum
/// directions (exact kernel vectors of the constraint Jacobian, rotated by
/// the phase of z), then one torus direction per gamma row, then per delta
/// row. Always exactly m vectors.
std::vector<CplxVec> tangent_frame(const SampleContext& ctx, const SamplePoint& p);

SampleCertificate certify(const std::vector<CplxVec>& frame, const Tolerances& tol);

/// Full pipeline: context, samples, frames, certificates, merged by index.
BatchSummary verify_batch(const QuadricSystem& gamma, const QuadricSystem& delta, int count,
                          unsigned long long seed, const Tolerances& tol);
/// Reference implementation without the parallel certification loop.
BatchSummary verify_batch_serial(const QuadricSystem& gamma, const QuadricSystem& delta, int count,
                                 unsigned long long seed, const Tolerances& tol);

}  // namespace toriclag
