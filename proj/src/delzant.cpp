#include "toriclag/delzant.hpp"

#include <stdexcept>

#include "toriclag/linalg.hpp"

namespace toriclag {

DelzantVerdict check_delzant(const Polyhedron& p) {
    DelzantVerdict v;
    if (!p.gale.lambda.covolume) throw std::runtime_error("check_delzant: normal lattice not full rank");
    v.lambda_covolume = *p.gale.lambda.covolume;
    int n = p.gale.n;
    for (const PolyVertex& vert : p.vertices) {
        if (static_cast<int>(vert.active.size()) != n) {
            v.failures.push_back({vert.point, vert.active, std::nullopt});
            continue;
        }
        RatMatrix normals(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) normals.at(r, c) = Rat(p.gale.a_vectors[vert.active[r]][c]);
        Rat d = determinant(normals);
        Int abs_d = Int(abs(d.get_num()));  // integer matrix, so den = 1
        if (abs_d != v.lambda_covolume) v.failures.push_back({vert.point, vert.active, abs_d});
    }
    v.is_delzant = v.failures.empty();
    return v;
}

EmbeddingResult embedding_criterion(const QuadricSystem& sys) {
    EmbeddingResult res;
    res.validation = validate(sys);
    if (!res.validation.all_pass()) return res;
    res.delzant = check_delzant(build_polyhedron(gale_dual(sys)));
    res.embedding = res.delzant->is_delzant;
    return res;
}

}  // namespace toriclag
