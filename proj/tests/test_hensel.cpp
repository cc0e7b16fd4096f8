#include <doctest.h>

#include "slpfactor/hensel.hpp"
#include "slpfactor/minpoly.hpp"

using namespace slpfactor;

namespace {

Slp product_circuit(const MPoly<Rat>& g, long e, const MPoly<Rat>& h,
                    const std::vector<std::string>& names) {
    MPoly<Rat> f = power(g, static_cast<unsigned long>(e)) * h;
    return slp_from_mpoly(f, names);
}

} // namespace

TEST_SUITE("hensel") {

TEST_CASE("init establishes the Bezout invariant") {
    MPoly<Rat> g = parse_mpoly("Y^2 + X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 1", {"X", "Y"});
    Slp f = product_circuit(g, 2, h, {"X", "Y"});
    RatPoly g0 = parse_unipoly("Y^2", "Y");
    RatPoly h0 = parse_unipoly("Y + 1", "Y");
    auto st = hensel_init(f, g0, h0, 2, 2);
    CHECK(st.u * h0 + st.v * g0 == RatPoly::constant(Rat(1)));
    CHECK(st.u.degree() < g0.degree());
    CHECK(st.s == 0);
    CHECK(st.order_budget == 4);  // d * e
}

TEST_CASE("step-by-step lift drains the order budget") {
    MPoly<Rat> g = parse_mpoly("Y^2 + X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 1", {"X", "Y"});
    Slp f = product_circuit(g, 2, h, {"X", "Y"});
    auto st = hensel_init(f, parse_unipoly("Y^2", "Y"), parse_unipoly("Y + 1", "Y"),
                          2, 2);
    long budget = st.order_budget;
    for (int s = 0; s < 2; ++s) {
        hensel_step(st);
        CHECK(st.order_budget == budget - st.e * (s + 1));
    }
    CHECK(st.g_partial() == g);
    CHECK_THROWS_AS(hensel_step(st), OrderExhausted);
}

TEST_CASE("round trips over a small family") {
    struct Case {
        const char *g, *h, *g0, *h0;
        long e;
        int d;
    };
    const Case cases[] = {
        {"Y^2 + X", "Y + 1", "Y^2", "Y + 1", 2, 2},
        {"Y^2 + Y + -1*X", "Y + 2", "Y^2 + Y", "Y + 2", 3, 2},
        {"Y + -1*X", "Y + 1", "Y", "Y + 1", 4, 1},
        {"Y^3 + Y + -1*X", "Y + 2", "Y^3 + Y", "Y + 2", 2, 3},
    };
    for (const auto& c : cases) {
        MPoly<Rat> g = parse_mpoly(c.g, {"X", "Y"});
        MPoly<Rat> h = parse_mpoly(c.h, {"X", "Y"});
        Slp f = product_circuit(g, c.e, h, {"X", "Y"});
        auto got = hensel_factor(f, parse_unipoly(c.g0, "Y"),
                                 parse_unipoly(c.h0, "Y"), c.e, c.d);
        CHECK(got == g);
    }
}

TEST_CASE("three variables") {
    auto names = std::vector<std::string>{"X1", "X2", "Y"};
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X1 + -1*X2", names);
    MPoly<Rat> h = parse_mpoly("Y + 2", names);
    Slp f = product_circuit(g, 2, h, names);
    auto got = hensel_factor(f, parse_unipoly("Y^2 + Y", "Y"),
                             parse_unipoly("Y + 2", "Y"), 2, 2);
    CHECK(got == g);
}

TEST_CASE("precondition failures") {
    MPoly<Rat> g = parse_mpoly("Y^2 + X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 1", {"X", "Y"});
    Slp f = product_circuit(g, 2, h, {"X", "Y"});
    // shared factor between g0 and h0
    CHECK_THROWS_AS(hensel_init(f, parse_unipoly("Y^2", "Y"),
                                parse_unipoly("Y", "Y"), 2, 2),
                    NotCoprime);
    // wrong specialization at X = 0
    CHECK_THROWS_AS(hensel_init(f, parse_unipoly("Y^2 + 1", "Y"),
                                parse_unipoly("Y + 1", "Y"), 2, 2),
                    SpecializationMismatch);
    // g0 not monic of the right degree
    CHECK_THROWS_AS(hensel_init(f, parse_unipoly("Y", "Y"),
                                parse_unipoly("Y + 1", "Y"), 2, 2),
                    ArityMismatch);
}

TEST_CASE("agreement with the Newton pipeline") {
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 2", {"X", "Y"});
    Slp f = product_circuit(g, 2, h, {"X", "Y"});
    auto via_hensel = hensel_factor(f, parse_unipoly("Y^2 + Y", "Y"),
                                    parse_unipoly("Y + 2", "Y"), 2, 2);
    auto via_newton =
        reconstruct_factor(f, 2, 2, {Rat(0), Rat(0)}, {Rat(0)}, Rat(1));
    CHECK(via_hensel == via_newton);
}

TEST_CASE("exact e-th roots") {
    auto names = std::vector<std::string>{"X1", "X2"};
    MPoly<Rat> g = parse_mpoly("1 + X1 + X2^2", names);
    MPoly<Rat> f3 = power(g, 3);
    CHECK(eth_root(slp_from_mpoly(f3, names), 3, 2) == g);
    MPoly<Rat> g2 = parse_mpoly("4 + X1", names);
    CHECK(eth_root(slp_from_mpoly(g2 * g2, names), 2, 1) == g2);
    // not a perfect power
    MPoly<Rat> bad = parse_mpoly("1 + X1", names);
    CHECK_THROWS_AS(eth_root(slp_from_mpoly(bad, names), 2, 1), NotAPerfectPower);
    // constant term is a square but the polynomial is not
    MPoly<Rat> bad2 = parse_mpoly("4 + X1 + X1^2", names);
    CHECK_THROWS_AS(eth_root(slp_from_mpoly(bad2, names), 2, 1),
                    NotAPerfectPower);
}

} // TEST_SUITE
