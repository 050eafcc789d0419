#include "toriclag/quadrics.hpp"

#include <stdexcept>

#include "toriclag/linalg.hpp"
#include "toriclag/lp.hpp"

namespace toriclag {

QuadricSystem QuadricSystem::make(int m, RatMatrix coeffs, RatVec rhs) {
    if (m < 0) throw std::invalid_argument("QuadricSystem: negative ambient dimension");
    if (coeffs.cols() != m) throw std::invalid_argument("QuadricSystem: row length != m");
    if (static_cast<int>(rhs.size()) != coeffs.rows())
        throw std::invalid_argument("QuadricSystem: rhs length != quadric count");
    if (coeffs.rows() > m) throw std::invalid_argument("QuadricSystem: more quadrics than coordinates");
    return {m, std::move(coeffs), std::move(rhs)};
}

CondA check_condition_a(const QuadricSystem& sys) {
    CondA out;
    LpWitness w = cone_feasible(sys.coeffs, sys.rhs);
    out.holds = w.feasible;
    if (w.feasible) out.witness = std::move(w.x);
    return out;
}

CondB check_condition_b(const QuadricSystem& sys) {
    CondB out;
    int k = sys.num_quadrics();
    if (k == 0) {
        out.holds = true;  // nothing to violate
        return out;
    }
    bool rhs_zero = true;
    for (const Rat& r : sys.rhs)
        if (r != 0) rhs_zero = false;
    if (rhs_zero) {
        // The empty subset already generates {0}, so zero rhs always fails.
        out.holds = false;
        out.violating_combination.assign(sys.m, Rat(0));
        return out;
    }
    // Cones are nested under subset inclusion: if rhs lies in the cone of
    // some subset with fewer than k columns, it lies in the cone of every
    // superset, in particular one of size exactly k-1. So testing the
    // size-(k-1) subsets alone covers all smaller subsets.
    int s = std::min(sys.m, k - 1);
    std::vector<int> sel(s);
    for (int i = 0; i < s; ++i) sel[i] = i;
    for (;;) {
        RatMatrix sub(k, s);
        for (int r = 0; r < k; ++r)
            for (int j = 0; j < s; ++j) sub.at(r, j) = sys.coeffs.at(r, sel[j]);
        LpWitness w = cone_feasible(sub, sys.rhs);
        if (w.feasible) {
            out.holds = false;
            out.violating_combination.assign(sys.m, Rat(0));
            for (int j = 0; j < s; ++j) {
                if (w.x[j] == 0) continue;
                // Report the support only: the witness certifies membership
                // in the cone of the columns it actually uses.
                out.violating_subset.push_back(sel[j]);
                out.violating_combination[sel[j]] = w.x[j];
            }
            return out;
        }
        int i = s - 1;
        while (i >= 0 && sel[i] == sys.m - s + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
    out.holds = true;
    return out;
}

CondC check_condition_c(const QuadricSystem& sys) {
    CondC out;
    int k = sys.num_quadrics();
    out.rank_found = rank(sys.coeffs);
    out.holds = out.rank_found == k;
    if (!out.holds) return out;

    LatticeData data;
    data.torus_rank = k;
    data.two_group_order = 1;
    mpz_mul_2exp(data.two_group_order.get_mpz_t(), data.two_group_order.get_mpz_t(), k);

    // L is spanned by the columns, which may be rational. Clear denominators
    // globally so lattice questions become integer HNF questions, and keep
    // the scale so L itself can be recovered.
    RatVec entries;
    entries.reserve(static_cast<std::size_t>(k) * sys.m);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < sys.m; ++c) entries.push_back(sys.coeffs.at(r, c));
    data.scale = denominator_lcm(entries);
    std::vector<IntVec> generators(sys.m, IntVec(k));
    for (int c = 0; c < sys.m; ++c)
        for (int r = 0; r < k; ++r) {
            Rat scaled = sys.coeffs.at(r, c) * Rat(data.scale);
            generators[c][r] = scaled.get_num();
        }
    data.lattice_l = hnf(generators, k);

    // Basis of L as rows: HNF rows divided by the scale. Its dual is the
    // lattice of vectors pairing integrally with L.
    RatMatrix l_basis(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) l_basis.at(r, c) = Rat(data.lattice_l.basis[r][c]) / Rat(data.scale);
    data.dual_basis = dual_lattice_basis(l_basis);
    out.lattice = std::move(data);
    return out;
}

ValidationVerdict validate(const QuadricSystem& sys) {
    ValidationVerdict v;
    v.cond_a = check_condition_a(sys);
    v.cond_b = check_condition_b(sys);
    v.cond_c = check_condition_c(sys);
    if (v.all_pass()) v.smooth_dim_z = 2 * sys.m - sys.num_quadrics();  // m + n
    return v;
}

QuadricSystem stack(const QuadricSystem& gamma, const QuadricSystem& delta) {
    if (gamma.m != delta.m) throw std::invalid_argument("stack: ambient dimension mismatch");
    int kg = gamma.num_quadrics(), kd = delta.num_quadrics();
    RatMatrix coeffs(kg + kd, gamma.m);
    RatVec rhs(kg + kd);
    for (int r = 0; r < kg; ++r) {
        for (int c = 0; c < gamma.m; ++c) coeffs.at(r, c) = gamma.coeffs.at(r, c);
        rhs[r] = gamma.rhs[r];
    }
    for (int r = 0; r < kd; ++r) {
        for (int c = 0; c < delta.m; ++c) coeffs.at(kg + r, c) = delta.coeffs.at(r, c);
        rhs[kg + r] = delta.rhs[r];
    }
    return QuadricSystem::make(gamma.m, std::move(coeffs), std::move(rhs));
}

}  // namespace toriclag
