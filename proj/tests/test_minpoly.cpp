#include <doctest.h>

#include "slpfactor/minpoly.hpp"

using namespace slpfactor;

TEST_SUITE("minpoly") {

TEST_CASE("recovers the minimal polynomial of an implicit series") {
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", {"X", "Y"});
    auto phi = newton_implicit(g, 2 * 2 * 2);
    auto sys = build_system(phi, 2);
    auto rec = solve_minpoly(sys);
    CHECK(rec == g);
    // pivot strategy does not change the unique solution
    CHECK(solve_minpoly(sys, PivotStrategy::LastNonzero) == rec);
}

TEST_CASE("insufficient precision is reported") {
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", {"X", "Y"});
    auto phi = newton_implicit(g, 3);  // need 2d^2 = 8
    CHECK_THROWS_AS(build_system(phi, 2), InsufficientPrecision);
}

TEST_CASE("degree overshoot triggers the consistency check") {
    // phi = implicit series of a degree-3 factor; demanding d = 2 cannot
    // produce a valid relation.
    MPoly<Rat> g = parse_mpoly("Y^3 + Y + -1*X", {"X", "Y"});
    auto phi = newton_implicit(g, 2 * 2 * 2);
    auto sys = build_system(phi, 2);
    CHECK_THROWS(solve_minpoly(sys));
}

TEST_CASE("end-to-end factor reconstruction, approximate lift") {
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", {"X", "Y"});
    Slp slp = slp_from_mpoly(g * g, {"X", "Y"});
    auto got = reconstruct_factor(slp, 2, 2, {Rat(0), Rat(0)}, {Rat(0)}, Rat(1));
    CHECK(got == g);
}

TEST_CASE("end-to-end factor reconstruction, exact lift at e = 1") {
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 2", {"X", "Y"});
    Slp slp = slp_from_mpoly(g * h, {"X", "Y"});
    auto got = reconstruct_factor(slp, 2, 1, {Rat(0), Rat(0)}, {Rat(0)}, Rat(1),
                                  LiftMode::Exact);
    CHECK(got == g);
}

TEST_CASE("reconstruction through a coordinate change") {
    // d = deg_Y mismatch: g = Y - X^2 needs the u-mixing found by the
    // witness-mode normalizer.
    MPoly<Rat> g = parse_mpoly("Y + -1*X^2", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 1", {"X", "Y"});
    Slp slp = slp_from_mpoly(g * g * h, {"X", "Y"});
    auto inst = normalize_with_witness(slp, g, h, 2);
    auto got = reconstruct_factor(inst);
    CHECK(got == g);
}

} // TEST_SUITE
