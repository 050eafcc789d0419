#include "toriclag/io.hpp"

#include <cstdio>
#include <sstream>

namespace toriclag {

using nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

Rat parse_rational_or_throw(const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rationals must be strings like \"3\" or \"1/2\"");
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": bad rational \"" + j.get<std::string>() + "\"");
    return *r;
}

QuadricSystem parse_system(const nlohmann::json& doc, const std::string& key, int m) {
    if (!doc.contains(key)) return QuadricSystem::empty(m);
    const nlohmann::json& j = doc[key];
    if (!j.is_object()) throw ParseError(key + " must be an object");
    for (const auto& item : j.items())
        if (item.key() != "rows" && item.key() != "rhs") throw ParseError(key + ": unknown key \"" + item.key() + "\"");
    if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError(key + ": missing rows array");
    if (!j.contains("rhs") || !j["rhs"].is_array()) throw ParseError(key + ": missing rhs array");
    int k = static_cast<int>(j["rows"].size());
    if (k > m) throw ParseError(key + ": more quadrics than coordinates");
    if (static_cast<int>(j["rhs"].size()) != k) throw ParseError(key + ": rhs length must match row count");
    RatMatrix coeffs(k, m);
    for (int r = 0; r < k; ++r) {
        const nlohmann::json& row = j["rows"][r];
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw ParseError(key + ": every row must have length m");
        for (int c = 0; c < m; ++c)
            coeffs.at(r, c) = parse_rational_or_throw(row[c], key + " row " + std::to_string(r + 1));
    }
    RatVec rhs(k);
    for (int r = 0; r < k; ++r) rhs[r] = parse_rational_or_throw(j["rhs"][r], key + " rhs");
    return QuadricSystem::make(m, std::move(coeffs), std::move(rhs));
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "m" && item.key() != "gamma" && item.key() != "delta")
            throw ParseError("unknown key \"" + item.key() + "\"");
    if (!j.contains("m") || !j["m"].is_number_integer()) throw ParseError("missing integer field \"m\"");
    long m = j["m"].get<long>();
    if (m < 1) throw ParseError("m must be at least 1");
    if (m > 10000) throw ParseError("m is implausibly large");
    InputDocument doc;
    doc.m = static_cast<int>(m);
    doc.gamma = parse_system(j, "gamma", doc.m);
    doc.delta = parse_system(j, "delta", doc.m);
    return doc;
}

namespace {

ordered_json system_to_json(const QuadricSystem& sys) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < sys.num_quadrics(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < sys.m; ++c) row.push_back(format_rational(sys.coeffs.at(r, c)));
        rows.push_back(std::move(row));
    }
    ordered_json rhs = ordered_json::array();
    for (const Rat& r : sys.rhs) rhs.push_back(format_rational(r));
    return ordered_json{{"rows", std::move(rows)}, {"rhs", std::move(rhs)}};
}

ordered_json rat_vec_json(const RatVec& v) {
    ordered_json out = ordered_json::array();
    for (const Rat& r : v) out.push_back(format_rational(r));
    return out;
}

ordered_json index_json_1based(const std::vector<int>& idx) {
    ordered_json out = ordered_json::array();
    for (int i : idx) out.push_back(i + 1);
    return out;
}

}  // namespace

std::string serialize_input(const InputDocument& doc) {
    ordered_json j;
    j["m"] = doc.m;
    if (doc.gamma.num_quadrics() > 0) j["gamma"] = system_to_json(doc.gamma);
    if (doc.delta.num_quadrics() > 0) j["delta"] = system_to_json(doc.delta);
    return j.dump(2) + "\n";
}

ordered_json validation_json(const ValidationVerdict& v) {
    ordered_json a{{"holds", v.cond_a.holds}};
    if (v.cond_a.holds) a["witness"] = rat_vec_json(v.cond_a.witness);
    ordered_json b{{"holds", v.cond_b.holds}};
    if (!v.cond_b.holds) {
        b["violating_subset"] = index_json_1based(v.cond_b.violating_subset);
        b["combination"] = rat_vec_json(v.cond_b.violating_combination);
    }
    ordered_json c{{"holds", v.cond_c.holds}, {"rank", v.cond_c.rank_found}};
    if (v.cond_c.lattice) {
        c["torus_rank"] = v.cond_c.lattice->torus_rank;
        c["two_group_order"] = v.cond_c.lattice->two_group_order.get_str();
    }
    ordered_json out{{"cond_a", std::move(a)}, {"cond_b", std::move(b)}, {"cond_c", std::move(c)}};
    if (v.smooth_dim_z) out["smooth_dim_Z"] = *v.smooth_dim_z;
    return out;
}

ordered_json delzant_json(const Polyhedron& p, const DelzantVerdict& v) {
    ordered_json vertices = ordered_json::array();
    for (const PolyVertex& vert : p.vertices)
        vertices.push_back(ordered_json{{"point", rat_vec_json(vert.point)}, {"active", index_json_1based(vert.active)}});
    ordered_json failures = ordered_json::array();
    for (const DelzantFailure& f : v.failures) {
        ordered_json fj{{"vertex", rat_vec_json(f.vertex)}, {"active", index_json_1based(f.active)}};
        if (f.abs_det) fj["abs_det"] = f.abs_det->get_str();
        else fj["non_simple"] = true;
        failures.push_back(std::move(fj));
    }
    return ordered_json{{"is_delzant", v.is_delzant},
                        {"lambda_covolume", v.lambda_covolume.get_str()},
                        {"vertex_count", static_cast<int>(p.vertices.size())},
                        {"is_simple", p.is_simple},
                        {"is_bounded", p.is_bounded},
                        {"vertices", std::move(vertices)},
                        {"failures", std::move(failures)}};
}

ordered_json report_json(const ConstructionReport& rep) {
    auto system_json = [](const SystemVerdicts& sv) -> ordered_json {
        if (!sv.checked) return nullptr;  // stacked system never formed (dim S < 0)
        ordered_json out{{"validation", validation_json(sv.validation)}};
        if (sv.polyhedron && sv.delzant) out["delzant"] = delzant_json(*sv.polyhedron, *sv.delzant);
        else out["delzant"] = nullptr;
        return out;
    };
    ordered_json out;
    out["m"] = rep.m;
    out["n"] = rep.n;
    out["ell"] = rep.ell;
    out["gamma"] = system_json(rep.gamma);
    out["delta"] = system_json(rep.delta);
    out["stacked"] = system_json(rep.stacked);
    if (rep.dims) {
        out["dims"] = ordered_json{{"Z_gamma", rep.dims->z_gamma}, {"V", rep.dims->v},     {"S", rep.dims->s},
                                   {"N", rep.dims->n},             {"V_hat", rep.dims->v_hat},
                                   {"N_hat", rep.dims->n_hat}};
    }
    out["torus"] = ordered_json{{"T_gamma_rank", rep.torus.t_gamma_rank},
                                {"T_delta_rank", rep.torus.t_delta_rank},
                                {"D_gamma_order", rep.torus.d_gamma_order.get_str()},
                                {"D_delta_order", rep.torus.d_delta_order.get_str()}};
    out["special_case"] = special_case_name(rep.special_case);
    ordered_json failures = ordered_json::array();
    for (const ConstructionFailure& f : rep.failures)
        failures.push_back(ordered_json{{"system", f.system}, {"condition", f.condition}});
    out["failures"] = std::move(failures);
    out["valid"] = rep.valid();
    return out;
}

ordered_json batch_json(const BatchSummary& sum, const Tolerances& tol) {
    return ordered_json{{"count", sum.count},
                        {"pass_fraction", sum.pass_fraction},
                        {"worst_pairing", sum.worst_pairing},
                        {"worst_rank_ratio", sum.worst_rank_ratio},
                        {"tol_omega", tol.tol_omega},
                        {"tol_rank", tol.tol_rank},
                        {"interior_margin", tol.interior_margin},
                        {"all_passed", sum.pass_fraction == 1.0}};
}

namespace {

std::string rat_vec_text(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << format_rational(v[i]);
    }
    os << ")";
    return os.str();
}

std::string index_text_1based(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ", ";
        os << idx[i] + 1;
    }
    os << "}";
    return os.str();
}

}  // namespace

std::string validation_text(const ValidationVerdict& v, const std::string& name) {
    std::ostringstream os;
    os << name << ":\n";
    os << "  condition (a): " << (v.cond_a.holds ? "pass" : "FAIL") << "\n";
    if (v.cond_a.holds) os << "    witness " << rat_vec_text(v.cond_a.witness) << "\n";
    os << "  condition (b): " << (v.cond_b.holds ? "pass" : "FAIL") << "\n";
    if (!v.cond_b.holds)
        os << "    rhs lies in the cone of columns " << index_text_1based(v.cond_b.violating_subset) << "\n";
    os << "  condition (c): " << (v.cond_c.holds ? "pass" : "FAIL") << " (rank " << v.cond_c.rank_found << ")\n";
    if (v.cond_c.lattice)
        os << "    torus rank " << v.cond_c.lattice->torus_rank << ", two-group order "
           << v.cond_c.lattice->two_group_order.get_str() << "\n";
    if (v.smooth_dim_z) os << "  dim Z = " << *v.smooth_dim_z << "\n";
    return os.str();
}

std::string delzant_text(const Polyhedron& p, const DelzantVerdict& v, const std::string& name) {
    std::ostringstream os;
    os << name << " polyhedron: " << p.vertices.size() << (p.vertices.size() == 1 ? " vertex" : " vertices") << ", "
       << (p.is_simple ? "simple" : "not simple") << ", " << (p.is_bounded ? "bounded" : "unbounded") << "\n";
    os << "  lattice covolume " << v.lambda_covolume.get_str() << "\n";
    os << "  Delzant: " << (v.is_delzant ? "pass" : "FAIL") << "\n";
    for (const DelzantFailure& f : v.failures) {
        os << "    vertex " << rat_vec_text(f.vertex) << ", active " << index_text_1based(f.active) << ": ";
        if (f.abs_det) os << "|det| = " << f.abs_det->get_str() << " != covolume " << v.lambda_covolume.get_str();
        else os << "non-simple (" << f.active.size() << " tight inequalities)";
        os << "\n";
    }
    return os.str();
}

std::string batch_text(const BatchSummary& sum) {
    std::ostringstream os;
    os << "samples: " << sum.count << "\n";
    os << "pass fraction: " << format_double(sum.pass_fraction) << "\n";
    os << "worst symplectic pairing: " << format_double(sum.worst_pairing) << "\n";
    os << "worst rank ratio: " << format_double(sum.worst_rank_ratio) << "\n";
    return os.str();
}

InputDocument example_document(const std::string& name, int m) {
    if (m < 1) throw ParseError("m must be at least 1");
    auto ones_system = [m]() {
        RatMatrix coeffs(1, m);
        for (int c = 0; c < m; ++c) coeffs.at(0, c) = 1;
        return QuadricSystem::make(m, std::move(coeffs), {Rat(1)});
    };
    InputDocument doc;
    doc.m = m;
    doc.gamma = QuadricSystem::empty(m);
    doc.delta = QuadricSystem::empty(m);
    if (name == "cm") {
        doc.delta = ones_system();
    } else if (name == "real") {
        doc.gamma = ones_system();
    } else if (name == "projective") {
        if (m < 3) throw ParseError("projective example requires m >= 3 (the stacked system loses rank below that)");
        doc.gamma = ones_system();
        RatMatrix dc(1, m);
        dc.at(0, 0) = 1;
        dc.at(0, 1) = 1;
        doc.delta = QuadricSystem::make(m, std::move(dc), {Rat(1, 2)});
    } else {
        throw ParseError("unknown example \"" + name + "\" (expected cm, real, or projective)");
    }
    return doc;
}

}  // namespace toriclag
