#include "toriclag/lp.hpp"

#include <stdexcept>

namespace toriclag {

// Phase-one simplex on A x = b, x >= 0: add one artificial per row, minimize
// their sum. Bland's rule (smallest eligible index) on both the entering and
// the leaving choice, so no cycling despite degeneracy.
LpWitness cone_feasible(const RatMatrix& cols, const RatVec& target) {
    int m = cols.rows();
    int n = cols.cols();
    if (static_cast<int>(target.size()) != m) throw std::invalid_argument("cone_feasible: size mismatch");

    // Tableau rows 0..m-1 over columns 0..n-1 original, n..n+m-1 artificial,
    // last column rhs. Rows negated as needed so every rhs is >= 0.
    int width = n + m + 1;
    RatMatrix t(m, width);
    for (int r = 0; r < m; ++r) {
        bool neg = target[r] < 0;
        for (int c = 0; c < n; ++c) t.at(r, c) = neg ? Rat(-cols.at(r, c)) : cols.at(r, c);
        t.at(r, n + r) = 1;
        t.at(r, width - 1) = neg ? Rat(-target[r]) : target[r];
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = n + r;

    // Objective row: minimize sum of artificials, priced out against the
    // artificial basis. Basic artificial columns start at reduced cost 0.
    RatVec obj(width, Rat(0));
    for (int r = 0; r < m; ++r) obj[n + r] = 1;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < width; ++c) obj[c] -= t.at(r, c);

    for (;;) {
        int enter = -1;
        for (int c = 0; c < n + m; ++c) {
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best_ratio;
        for (int r = 0; r < m; ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rat ratio = t.at(r, width - 1) / t.at(r, enter);
            if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            // Objective is bounded below by 0, so an unbounded improving ray
            // cannot occur in phase one.
            throw std::logic_error("cone_feasible: unbounded phase-one ray");
        }
        Rat inv = 1 / t.at(leave, enter);
        for (int c = 0; c < width; ++c) t.at(leave, c) *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t.at(r, enter) == 0) continue;
            Rat f = t.at(r, enter);
            for (int c = 0; c < width; ++c) t.at(r, c) -= f * t.at(leave, c);
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (int c = 0; c < width; ++c) obj[c] -= f * t.at(leave, c);
        }
        basis[leave] = enter;
    }

    LpWitness w;
    // Feasible iff the artificials can all be driven to zero: the minimized
    // objective value is -obj[rhs].
    w.feasible = obj[width - 1] == 0;
    if (w.feasible) {
        w.x.assign(n, Rat(0));
        for (int r = 0; r < m; ++r)
            if (basis[r] < n) w.x[basis[r]] = t.at(r, width - 1);
    }
    return w;
}

}  // namespace toriclag
