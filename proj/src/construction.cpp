#include "toriclag/construction.hpp"

#include <sstream>
#include <stdexcept>

namespace toriclag {

const char* special_case_name(SpecialCase c) {
    switch (c) {
        case SpecialCase::ambient_cm: return "ambient_Cm";
        case SpecialCase::real_points: return "real_points";
        case SpecialCase::projective: return "projective";
        case SpecialCase::general: return "general";
    }
    return "general";
}

namespace {

Int pow2(int e) {
    Int x = 1;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e);
    return x;
}

void record_validation_failures(const ValidationVerdict& v, const std::string& name,
                                std::vector<ConstructionFailure>& failures) {
    if (!v.cond_a.holds) failures.push_back({name, "a"});
    if (!v.cond_b.holds) failures.push_back({name, "b"});
    if (!v.cond_c.holds) failures.push_back({name, "c"});
}

SpecialCase classify(const QuadricSystem& gamma, const QuadricSystem& delta) {
    // gamma builds the ambient toric variety, delta cuts out the Lagrangian:
    // no gamma quadrics leaves the ambient C^m, no delta quadrics leaves the
    // real locus, and the single equal-positive-coefficients gamma quadric is
    // the projective family.
    if (gamma.num_quadrics() == 0) return SpecialCase::ambient_cm;
    if (delta.num_quadrics() == 0) return SpecialCase::real_points;
    if (gamma.num_quadrics() == 1) {
        const Rat& t = gamma.coeffs.at(0, 0);
        bool all_equal = t > 0;
        for (int c = 1; c < gamma.m && all_equal; ++c)
            if (gamma.coeffs.at(0, c) != t) all_equal = false;
        if (all_equal) return SpecialCase::projective;
    }
    return SpecialCase::general;
}

}  // namespace

ConstructionReport build_construction(const QuadricSystem& gamma, const QuadricSystem& delta) {
    if (gamma.m != delta.m) throw std::invalid_argument("build_construction: ambient dimension mismatch");
    ConstructionReport rep;
    rep.m = gamma.m;
    rep.n = gamma.m - gamma.num_quadrics();
    rep.ell = delta.m - delta.num_quadrics();
    int dim_s = rep.n + rep.ell - rep.m;

    rep.gamma.checked = true;
    rep.gamma.validation = validate(gamma);
    rep.delta.checked = true;
    rep.delta.validation = validate(delta);
    record_validation_failures(rep.gamma.validation, "gamma", rep.failures);
    record_validation_failures(rep.delta.validation, "delta", rep.failures);

    // dim S < 0 means the pair carries more quadrics than coordinates, so the
    // stacked system cannot even be formed; reject before any polyhedral work.
    if (dim_s < 0) {
        rep.failures.push_back({"pair", "dim_s_negative"});
    } else {
        QuadricSystem stacked_sys = stack(gamma, delta);
        rep.stacked.checked = true;
        rep.stacked.validation = validate(stacked_sys);
        record_validation_failures(rep.stacked.validation, "stacked", rep.failures);

        struct Slot {
            const QuadricSystem* sys;
            SystemVerdicts* out;
            const char* name;
        };
        Slot slots[3] = {{&gamma, &rep.gamma, "gamma"},
                         {&delta, &rep.delta, "delta"},
                         {&stacked_sys, &rep.stacked, "stacked"}};
        for (Slot& slot : slots) {
            if (!slot.out->validation.all_pass()) continue;
            slot.out->polyhedron = build_polyhedron(gale_dual(*slot.sys));
            slot.out->delzant = check_delzant(*slot.out->polyhedron);
            if (!slot.out->delzant->is_delzant) rep.failures.push_back({slot.name, "delzant"});
        }
    }

    rep.torus.t_gamma_rank = rep.m - rep.n;
    rep.torus.t_delta_rank = rep.m - rep.ell;
    rep.torus.d_gamma_order = pow2(rep.m - rep.n);
    rep.torus.d_delta_order = pow2(rep.m - rep.ell);

    if (rep.failures.empty()) {
        ConstructionDims d;
        d.z_gamma = rep.m + rep.n;
        d.v = 2 * rep.n;
        d.s = dim_s;
        d.n = rep.n;
        d.v_hat = 2 * dim_s;
        d.n_hat = dim_s;
        rep.dims = d;
    }
    rep.special_case = classify(gamma, delta);
    return rep;
}

namespace {

std::string verdict_line(const SystemVerdicts& sv) {
    if (!sv.checked) return "skipped (dim S < 0)";
    auto word = [](bool b) { return b ? "pass" : "FAIL"; };
    std::ostringstream os;
    os << "conditions a,b,c: " << word(sv.validation.cond_a.holds) << "," << word(sv.validation.cond_b.holds)
       << "," << word(sv.validation.cond_c.holds) << "; Delzant: ";
    if (sv.delzant) os << word(sv.delzant->is_delzant);
    else os << "skipped";
    return os.str();
}

}  // namespace

std::string report_text(const ConstructionReport& rep) {
    std::ostringstream os;
    os << "construction report\n";
    os << "  m = " << rep.m << ", n = " << rep.n << ", ell = " << rep.ell << "\n";
    os << "  gamma:   " << verdict_line(rep.gamma) << "\n";
    os << "  delta:   " << verdict_line(rep.delta) << "\n";
    os << "  stacked: " << verdict_line(rep.stacked) << "\n";
    if (rep.dims) {
        os << "  dim Z_gamma = m + n = " << rep.dims->z_gamma << "\n";
        os << "  dim V = 2n = " << rep.dims->v << "\n";
        os << "  dim S = n + ell - m = " << rep.dims->s << "\n";
        os << "  dim N = n = " << rep.dims->n << "\n";
        os << "  dim V_hat = 2(n + ell - m) = " << rep.dims->v_hat << "\n";
        os << "  dim N_hat = n + ell - m = " << rep.dims->n_hat << "\n";
    }
    os << "  T_gamma rank = " << rep.torus.t_gamma_rank << ", D_gamma order = " << rep.torus.d_gamma_order.get_str()
       << "\n";
    os << "  T_delta rank = " << rep.torus.t_delta_rank << ", D_delta order = " << rep.torus.d_delta_order.get_str()
       << "\n";
    os << "  special case: " << special_case_name(rep.special_case);
    if (rep.special_case == SpecialCase::projective) os << " (V = CP^" << rep.m - 1 << ")";
    if (rep.special_case == SpecialCase::ambient_cm) os << " (V = C^" << rep.m << ")";
    os << "\n";
    if (!rep.failures.empty()) {
        os << "  failures:\n";
        for (const ConstructionFailure& f : rep.failures) {
            os << "    " << f.system << ": ";
            if (f.condition == "delzant") os << "Delzant";
            else if (f.condition == "dim_s_negative") os << "dim S = n + ell - m < 0";
            else os << "condition " << f.condition;
            os << "\n";
        }
    }
    os << "  result: " << (rep.valid() ? "valid" : "rejected") << "\n";
    return os.str();
}

}  // namespace toriclag
