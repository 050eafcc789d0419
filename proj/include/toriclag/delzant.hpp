#pragma once

#include <optional>
#include <vector>

#include "toriclag/gale.hpp"

namespace toriclag {

struct DelzantFailure {
    RatVec vertex;
    std::vector<int> active;      // 0-based inequality indices
    std::optional<Int> abs_det;   // unset marks a non-simple vertex
};

struct DelzantVerdict {
    bool is_delzant = false;
    std::vector<DelzantFailure> failures;
    Int lambda_covolume = 1;
};

/// A vertex passes iff its n active normals have |det| equal to the covolume
/// of the lattice spanned by all normals; that equality says exactly that the
/// normals are a basis of that lattice. Non-simple vertices fail outright.
DelzantVerdict check_delzant(const Polyhedron& p);

struct EmbeddingResult {
    bool embedding = false;
    ValidationVerdict validation;
    std::optional<DelzantVerdict> delzant;  // present iff validation passed
};

/// validate -> gale_dual -> build_polyhedron -> check_delzant.
EmbeddingResult embedding_criterion(const QuadricSystem& sys);

}  // namespace toriclag
