#pragma once

#include <vector>

#include "toriclag/matrix.hpp"

namespace toriclag {

/// Outcome of an exact cone-membership query.
struct LpWitness {
    bool feasible = false;
    RatVec x;  // nonnegative combination with cols * x = target when feasible
};

/// Decides whether target lies in the cone of nonnegative combinations of the
/// columns of `cols`, i.e. whether cols * x = target has a solution x >= 0.
/// Exact rational phase-one simplex with Bland's rule; always terminates.
LpWitness cone_feasible(const RatMatrix& cols, const RatVec& target);

}  // namespace toriclag
