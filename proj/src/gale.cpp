#include "toriclag/gale.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "toriclag/linalg.hpp"
#include "toriclag/lp.hpp"

namespace toriclag {

GaleDual gale_dual(const QuadricSystem& sys) {
    int k = sys.num_quadrics();
    GaleDual gd;
    gd.m = sys.m;
    gd.n = sys.m - k;

    IntLatticeBasis kernel = integer_kernel_basis(sys.coeffs);
    if (kernel.lattice_rank() != gd.n) throw std::runtime_error("gale_dual: coefficient rank defect");
    // a_i is the i-th column of the kernel-basis matrix: one integer vector
    // in Z^n per ambient coordinate.
    gd.a_vectors.assign(sys.m, IntVec(gd.n));
    for (int i = 0; i < sys.m; ++i)
        for (int j = 0; j < gd.n; ++j) gd.a_vectors[i][j] = kernel.basis[j][i];

    auto b = solve_linear(sys.coeffs, sys.rhs);
    if (!b) throw std::runtime_error("gale_dual: inconsistent system");
    gd.b_offsets = std::move(*b);

    gd.lambda = hnf(gd.a_vectors, gd.n);
    return gd;
}

namespace {

Rat eval_inequality(const GaleDual& gd, int i, const RatVec& x) {
    Rat s = gd.b_offsets[i];
    for (int j = 0; j < gd.n; ++j) s += Rat(gd.a_vectors[i][j]) * x[j];
    return s;
}

// Tries one n-subset: if its normals are independent and the tight solution
// satisfies every inequality, returns the vertex with its full active set.
std::optional<PolyVertex> try_subset(const GaleDual& gd, const std::vector<int>& sel) {
    int n = gd.n;
    RatMatrix mat(n, n);
    RatVec rhs(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) mat.at(r, c) = Rat(gd.a_vectors[sel[r]][c]);
        rhs[r] = -gd.b_offsets[sel[r]];
    }
    if (rank(mat) != n) return std::nullopt;
    auto x = solve_linear(mat, rhs);
    PolyVertex v;
    v.point = std::move(*x);
    for (int i = 0; i < gd.m; ++i) {
        Rat val = eval_inequality(gd, i, v.point);
        if (val < 0) return std::nullopt;
        if (val == 0) v.active.push_back(i);
    }
    return v;
}

std::vector<std::vector<int>> all_subsets(int m, int n) {
    std::vector<std::vector<int>> out;
    if (n > m) return out;
    std::vector<int> sel(n);
    for (int i = 0; i < n; ++i) sel[i] = i;
    for (;;) {
        out.push_back(sel);
        int i = n - 1;
        while (i >= 0 && sel[i] == m - n + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
    }
    return out;
}

// Deterministic order and deduplication: candidates sorted by active set,
// duplicates (same point rediscovered through different defining subsets)
// collapsed by exact coordinates.
std::vector<PolyVertex> merge_candidates(std::vector<PolyVertex> cand) {
    std::sort(cand.begin(), cand.end(), [](const PolyVertex& a, const PolyVertex& b) {
        if (a.active != b.active) return a.active < b.active;
        for (std::size_t i = 0; i < a.point.size(); ++i)
            if (a.point[i] != b.point[i]) return a.point[i] < b.point[i];
        return false;
    });
    std::vector<PolyVertex> out;
    for (PolyVertex& v : cand)
        if (out.empty() || out.back().point != v.point) out.push_back(std::move(v));
    return out;
}

}  // namespace

std::vector<PolyVertex> enumerate_vertices_serial(const GaleDual& gd) {
    std::vector<PolyVertex> cand;
    for (const auto& sel : all_subsets(gd.m, gd.n)) {
        auto v = try_subset(gd, sel);
        if (v) cand.push_back(std::move(*v));
    }
    return merge_candidates(std::move(cand));
}

std::vector<PolyVertex> enumerate_vertices_parallel(const GaleDual& gd) {
    std::vector<std::vector<int>> subsets = all_subsets(gd.m, gd.n);
    int total = static_cast<int>(subsets.size());
    std::vector<std::optional<PolyVertex>> results(total);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < total; ++i) results[i] = try_subset(gd, subsets[i]);
    std::vector<PolyVertex> cand;
    for (auto& r : results)
        if (r) cand.push_back(std::move(*r));
    return merge_candidates(std::move(cand));
}

Polyhedron build_polyhedron(const GaleDual& gd) {
    Polyhedron p;
    p.gale = gd;
    p.vertices = enumerate_vertices_parallel(gd);
    p.is_simple = true;
    for (const PolyVertex& v : p.vertices)
        if (static_cast<int>(v.active.size()) != gd.n) p.is_simple = false;
    // Bounded iff the recession cone {x : <a_i,x> >= 0 for all i} is {0},
    // i.e. the a_i positively span R^n: +-e_j lies in their cone for each j.
    p.is_bounded = true;
    RatMatrix cols(gd.n, gd.m);
    for (int i = 0; i < gd.m; ++i)
        for (int j = 0; j < gd.n; ++j) cols.at(j, i) = Rat(gd.a_vectors[i][j]);
    for (int j = 0; j < gd.n && p.is_bounded; ++j) {
        for (int sign : {1, -1}) {
            RatVec e(gd.n, Rat(0));
            e[j] = sign;
            if (!cone_feasible(cols, e).feasible) {
                p.is_bounded = false;
                break;
            }
        }
    }
    return p;
}

}  // namespace toriclag
