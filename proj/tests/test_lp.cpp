#include "toriclag/lp.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace toriclag;

TEST_CASE("cone membership in the positive orthant") {
    RatMatrix cols{{1, 0}, {0, 1}};
    LpWitness w = cone_feasible(cols, {Rat(3), Rat(2)});
    REQUIRE(w.feasible);
    CHECK(w.x == RatVec{Rat(3), Rat(2)});
    CHECK_FALSE(cone_feasible(cols, {Rat(-1), Rat(0)}).feasible);
}

TEST_CASE("zero target is always in the cone") {
    RatMatrix cols{{1, -1}, {2, 3}};
    LpWitness w = cone_feasible(cols, {Rat(0), Rat(0)});
    REQUIRE(w.feasible);
    CHECK(w.x == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("empty generating set spans only the origin") {
    RatMatrix cols(2, 0);
    CHECK(cone_feasible(cols, {Rat(0), Rat(0)}).feasible);
    CHECK_FALSE(cone_feasible(cols, {Rat(1), Rat(0)}).feasible);
}

TEST_CASE("degenerate zero-dimensional query") {
    RatMatrix cols(0, 3);
    LpWitness w = cone_feasible(cols, {});
    REQUIRE(w.feasible);
    CHECK(w.x == RatVec(3, Rat(0)));
}

TEST_CASE("witness certifies feasibility exactly") {
    oracle::Lcg rng(61);
    int feasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int m = static_cast<int>(rng.range(1, 4));
        int n = static_cast<int>(rng.range(1, 5));
        RatMatrix cols(m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) cols.at(r, c) = rng.range(-2, 2);
        RatVec target(m);
        for (int r = 0; r < m; ++r) target[r] = rng.range(-2, 2);
        LpWitness w = cone_feasible(cols, target);
        if (w.feasible) {
            ++feasible_seen;
            RatVec prod = cols.apply(w.x);
            for (int r = 0; r < m; ++r) CHECK(prod[r] == target[r]);
            for (const Rat& v : w.x) CHECK(v >= 0);
        }
    }
    CHECK(feasible_seen > 20);
}

TEST_CASE("feasibility agrees with the subset enumeration oracle") {
    oracle::Lcg rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        int m = static_cast<int>(rng.range(1, 3));
        int n = static_cast<int>(rng.range(1, 4));
        RatMatrix cols(m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) cols.at(r, c) = rng.range(-2, 2);
        RatVec target(m);
        for (int r = 0; r < m; ++r) target[r] = rng.range(-2, 2);
        bool expect = oracle::cone_feasible_by_subsets(cols, target);
        CHECK(cone_feasible(cols, target).feasible == expect);
    }
}

TEST_CASE("degenerate columns do not stall the pivot rule") {
    // All columns identical; heavy degeneracy in the ratio test.
    RatMatrix cols{{1, 1, 1}, {1, 1, 1}};
    LpWitness w = cone_feasible(cols, {Rat(5), Rat(5)});
    REQUIRE(w.feasible);
    RatVec prod = cols.apply(w.x);
    CHECK(prod[0] == 5);
    CHECK(prod[1] == 5);
    CHECK_FALSE(cone_feasible(cols, {Rat(5), Rat(4)}).feasible);
}
