#include "toriclag/sampler.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "toriclag/linalg.hpp"

namespace toriclag {

namespace {

// Reproducible randomness: every proposal index gets its own engine keyed by
// (seed, index), so batches are order- and thread-independent and sample j
// is always the j-th accepted proposal.
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::mt19937_64 proposal_engine(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))));
}

double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

double exponential_draw(std::mt19937_64& eng) { return -std::log1p(-uniform01(eng)); }

int sign_draw(std::mt19937_64& eng) { return (eng() & 1ull) ? 1 : -1; }

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

SampleContext make_sample_context(const QuadricSystem& gamma, const QuadricSystem& delta) {
    ConstructionReport rep = build_construction(gamma, delta);
    if (!rep.valid()) {
        std::ostringstream os;
        os << "sampling requires a valid construction; failures:";
        for (const ConstructionFailure& f : rep.failures) os << " " << f.system << "/" << f.condition;
        throw std::runtime_error(os.str());
    }
    SampleContext ctx;
    ctx.gamma = gamma;
    ctx.delta = delta;
    ctx.stacked = stack(gamma, delta);
    ctx.poly = std::move(*rep.stacked.polyhedron);
    for (const PolyVertex& v : ctx.poly.vertices) {
        RatVec y(ctx.stacked.m);
        for (int i = 0; i < ctx.stacked.m; ++i) {
            Rat s = ctx.poly.gale.b_offsets[i];
            for (int j = 0; j < ctx.poly.gale.n; ++j) s += Rat(ctx.poly.gale.a_vectors[i][j]) * v.point[j];
            y[i] = s;
        }
        ctx.y_vertices.push_back(std::move(y));
    }
    ctx.kernel = rational_kernel_basis(ctx.stacked.coeffs);
    return ctx;
}

std::vector<SamplePoint> sample_points(const SampleContext& ctx, int count, unsigned long long seed,
                                       double interior_margin) {
    if (count < 0) throw std::invalid_argument("sample_points: negative count");
    std::vector<SamplePoint> out;
    if (count == 0) return out;
    if (ctx.y_vertices.empty()) throw std::runtime_error("sample_points: polyhedron has no vertices");

    int m = ctx.stacked.m;
    int nv = static_cast<int>(ctx.y_vertices.size());
    Rat margin(interior_margin);  // exact binary value of the double
    const long long probe_window = 10000;
    const long long hard_cap = probe_window + 10000ll * count;
    long long proposals = 0;
    while (static_cast<int>(out.size()) < count) {
        if (proposals == probe_window && out.empty())
            throw std::runtime_error("sample_points: interior margin rejected the first 10000 proposals");
        if (proposals >= hard_cap)
            throw std::runtime_error("sample_points: interior margin accepts too rarely");
        std::mt19937_64 eng = proposal_engine(seed, static_cast<std::uint64_t>(proposals));
        ++proposals;

        // Convex combination of the y-space vertices with exponential weights.
        // The double weights are converted exactly to rationals, so y solves
        // the stacked system exactly.
        std::vector<double> w(nv);
        double total = 0;
        for (int v = 0; v < nv; ++v) {
            w[v] = exponential_draw(eng);
            total += w[v];
        }
        if (total == 0) continue;  // all-zero weights: unusable proposal
        Rat total_r(0);
        std::vector<Rat> wr(nv);
        for (int v = 0; v < nv; ++v) {
            wr[v] = Rat(w[v]);
            total_r += wr[v];
        }
        RatVec y(m, Rat(0));
        for (int v = 0; v < nv; ++v) {
            Rat coef = wr[v] / total_r;
            for (int i = 0; i < m; ++i) y[i] += coef * ctx.y_vertices[v][i];
        }
        bool interior = true;
        for (int i = 0; i < m; ++i)
            if (y[i] < margin) interior = false;
        if (!interior) continue;

        SamplePoint p;
        p.y = std::move(y);
        p.signs.resize(m);
        for (int i = 0; i < m; ++i) p.signs[i] = sign_draw(eng);
        p.phi_gamma.resize(ctx.gamma.num_quadrics());
        for (double& phi : p.phi_gamma) phi = uniform01(eng);
        p.phi_delta.resize(ctx.delta.num_quadrics());
        for (double& phi : p.phi_delta) phi = uniform01(eng);
        p.u.resize(m);
        for (int i = 0; i < m; ++i) p.u[i] = p.signs[i] * std::sqrt(p.y[i].get_d());
        out.push_back(std::move(p));
    }
    return out;
}

void lift_point(const SampleContext& ctx, SamplePoint& p) {
    int m = ctx.stacked.m;
    p.z.resize(m);
    for (int k = 0; k < m; ++k) {
        double theta = 0;
        for (int j = 0; j < ctx.gamma.num_quadrics(); ++j)
            theta += ctx.gamma.coeffs.at(j, k).get_d() * p.phi_gamma[j];
        for (int j = 0; j < ctx.delta.num_quadrics(); ++j)
            theta += ctx.delta.coeffs.at(j, k).get_d() * p.phi_delta[j];
        p.z[k] = p.u[k] * Cplx(std::cos(two_pi * theta), std::sin(two_pi * theta));
    }
}

std::vector<CplxVec> tangent_frame(const SampleContext& ctx, const SamplePoint& p) {
    int m = ctx.stacked.m;
    std::vector<CplxVec> frame;
    frame.reserve(m);
    // Real-stratum directions: the constraint Jacobian in u-coordinates is
    // [2*coeffs(j,k)*u_k], so t is in its kernel iff (u .* t) is in the
    // kernel of coeffs. The exact rational kernel basis gives t_k = v_k/(2u_k)
    // without any numerical rank decisions. Each direction is rotated into
    // the fiber by the phase z_k/u_k (not arg z_k: u_k may be negative, and
    // the lift j scales the phase factor by the signed u_k).
    for (const RatVec& v : ctx.kernel) {
        CplxVec t(m);
        for (int k = 0; k < m; ++k) {
            double tk = v[k].get_d() / (2.0 * p.u[k]);
            t[k] = tk * (p.z[k] / p.u[k]);
        }
        frame.push_back(std::move(t));
    }
    // Torus directions: d/dphi of u_k*exp(2*pi*i*(...)) along each row.
    for (int j = 0; j < ctx.gamma.num_quadrics(); ++j) {
        CplxVec t(m);
        for (int k = 0; k < m; ++k) t[k] = Cplx(0, two_pi * ctx.gamma.coeffs.at(j, k).get_d()) * p.z[k];
        frame.push_back(std::move(t));
    }
    for (int j = 0; j < ctx.delta.num_quadrics(); ++j) {
        CplxVec t(m);
        for (int k = 0; k < m; ++k) t[k] = Cplx(0, two_pi * ctx.delta.coeffs.at(j, k).get_d()) * p.z[k];
        frame.push_back(std::move(t));
    }
    return frame;
}

SampleCertificate certify(const std::vector<CplxVec>& frame, const Tolerances& tol) {
    SampleCertificate cert;
    int f = static_cast<int>(frame.size());
    int m = f == 0 ? 0 : static_cast<int>(frame[0].size());
    std::vector<double> norms(f, 0.0);
    for (int i = 0; i < f; ++i) {
        double s = 0;
        for (const Cplx& c : frame[i]) s += std::norm(c);
        norms[i] = std::sqrt(s);
    }
    for (int i = 0; i < f; ++i) {
        for (int j = i + 1; j < f; ++j) {
            double denom = norms[i] * norms[j];
            if (denom == 0) continue;  // rank check reports the degeneracy
            double pairing = 0;
            for (int k = 0; k < m; ++k) pairing += std::imag(std::conj(frame[i][k]) * frame[j][k]);
            pairing = std::abs(pairing) / denom;
            if (pairing > cert.max_symplectic_pairing) cert.max_symplectic_pairing = pairing;
        }
    }
    cert.lagrangian_pass = cert.max_symplectic_pairing <= tol.tol_omega;

    Eigen::MatrixXd real_frame(2 * m, f);
    for (int c = 0; c < f; ++c)
        for (int k = 0; k < m; ++k) {
            real_frame(k, c) = frame[c][k].real();
            real_frame(m + k, c) = frame[c][k].imag();
        }
    if (f > 0 && m > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_frame);
        const auto& sv = svd.singularValues();
        double smax = sv(0);
        double smin = sv(sv.size() - 1);
        cert.min_singular_value_ratio = smax > 0 ? smin / smax : 0.0;
    }
    cert.immersion_pass = cert.min_singular_value_ratio >= tol.tol_rank;
    return cert;
}

namespace {

BatchSummary run_batch(const QuadricSystem& gamma, const QuadricSystem& delta, int count,
                       unsigned long long seed, const Tolerances& tol, bool parallel) {
    SampleContext ctx = make_sample_context(gamma, delta);
    BatchSummary sum;
    sum.count = count;
    if (count == 0) return sum;  // vacuous: pass_fraction 1, worst values 0
    std::vector<SamplePoint> samples = sample_points(ctx, count, seed, tol.interior_margin);
    std::vector<SampleCertificate> certs(count);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            lift_point(ctx, samples[i]);
            certs[i] = certify(tangent_frame(ctx, samples[i]), tol);
        }
    } else {
        for (int i = 0; i < count; ++i) {
            lift_point(ctx, samples[i]);
            certs[i] = certify(tangent_frame(ctx, samples[i]), tol);
        }
    }
    int passed = 0;
    sum.worst_rank_ratio = certs[0].min_singular_value_ratio;
    for (const SampleCertificate& c : certs) {
        if (c.lagrangian_pass && c.immersion_pass) ++passed;
        if (c.max_symplectic_pairing > sum.worst_pairing) sum.worst_pairing = c.max_symplectic_pairing;
        if (c.min_singular_value_ratio < sum.worst_rank_ratio) sum.worst_rank_ratio = c.min_singular_value_ratio;
    }
    sum.pass_fraction = static_cast<double>(passed) / count;
    return sum;
}

}  // namespace

BatchSummary verify_batch(const QuadricSystem& gamma, const QuadricSystem& delta, int count,
                          unsigned long long seed, const Tolerances& tol) {
    return run_batch(gamma, delta, count, seed, tol, true);
}

BatchSummary verify_batch_serial(const QuadricSystem& gamma, const QuadricSystem& delta, int count,
                                 unsigned long long seed, const Tolerances& tol) {
    return run_batch(gamma, delta, count, seed, tol, false);
}

}  // namespace toriclag
