#include <doctest.h>

#include <random>

#include "slpfactor/divfree.hpp"
#include "slpfactor/padic.hpp"
#include "slpfactor/series.hpp"

using namespace slpfactor;

namespace {

TruncSeries<Rat> rseries(std::mt19937& rng, int bound, std::size_t n) {
    std::uniform_int_distribution<int> ex(0, bound);
    std::uniform_int_distribution<long> cf(-4, 4);
    MPoly<Rat> p;
    p.set_arity(n);
    for (int t = 0; t < 6; ++t) {
        Expo e(n);
        int left = ex(rng);
        for (auto& k : e) {
            std::uniform_int_distribution<int> part(0, left);
            k = part(rng);
            left -= k;
        }
        p.add_term(std::move(e), rat(cf(rng), 2));
    }
    return TruncSeries<Rat>::from_poly(p, bound);
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("truncated series form a ring") {
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        auto a = rseries(rng, 5, 2), b = rseries(rng, 5, 2), c = rseries(rng, 5, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b - b == a);
    }
}

TEST_CASE("series division inverts multiplication") {
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto a = rseries(rng, 5, 2);
        auto b = rseries(rng, 5, 2);
        if (b.part(0).is_zero_poly()) continue;  // need a unit
        CHECK(series_div(a, b) * b == a);
    }
    // geometric series: 1 / (1 - X)
    auto x = MPoly<Rat>::variable(0, 1);
    auto one = MPoly<Rat>(Rat(1), 1);
    auto q = series_div(TruncSeries<Rat>::from_poly(one, 8),
                        TruncSeries<Rat>::from_poly(one - x, 8));
    for (int d = 0; d <= 8; ++d) {
        MPoly<Rat> expect;
        expect.set_arity(1);
        expect.add_term(Expo{d}, Rat(1));
        CHECK(q.part(d) == expect);
    }
    CHECK_THROWS_AS(series_div(TruncSeries<Rat>::from_poly(one, 4),
                               TruncSeries<Rat>::from_poly(x, 4)),
                    NotAUnit);
}

TEST_CASE("polynomial composition via Horner") {
    // F(Y) = 1 + 2Y + Y^2 at Phi = X + X^2, truncated at 3
    std::size_t n = 1;
    auto phi = TruncSeries<Rat>::from_poly(
        parse_mpoly("X + X^2", {"X"}), 3);
    std::vector<TruncSeries<Rat>> f = {
        TruncSeries<Rat>::from_poly(MPoly<Rat>(Rat(1), n), 3),
        TruncSeries<Rat>::from_poly(MPoly<Rat>(Rat(2), n), 3),
        TruncSeries<Rat>::from_poly(MPoly<Rat>(Rat(1), n), 3)};
    auto got = series_poly_compose(f, phi);
    // (1 + Phi)^2 = 1 + 2X + 3X^2 + 2X^3 + X^4, truncated
    CHECK(got.to_poly() == parse_mpoly("1 + 2*X + 3*X^2 + 2*X^3", {"X"}));
}

TEST_CASE("bihomogeneous extraction matches the expansion oracle") {
    Slp slp = parse_slp("inputs X Y\n"
                        "v1 = add X Y\n"
                        "v2 = mul v1 v1\n"
                        "output v2\n");
    auto t = bihom_extract<Rat>(slp, 2);
    // (X+Y)^2 has exactly three entries
    int nonzero = 0;
    for (int i = 0; i <= 2; ++i)
        for (int d = 0; d <= 2; ++d)
            if (!t.entry(i, d).is_zero_poly()) ++nonzero;
    CHECK(nonzero == 3);
    CHECK(t.reassemble() == expand_rat(slp));

    // oracle on a deeper circuit, with truncation
    Slp s2 = parse_slp("inputs X1 X2 Y\n"
                       "const c1 = 1/2\n"
                       "v1 = mul X1 Y\n"
                       "v2 = add v1 X2\n"
                       "v3 = mul v2 v2\n"
                       "v4 = mul v3 v2\n"
                       "v5 = add v4 c1\n"
                       "output v5\n");
    for (int cap = 1; cap <= 3; ++cap) {
        auto tab = bihom_extract<Rat>(s2, cap);
        MPoly<Rat> f = expand_rat(s2);
        MPoly<Rat> expect;
        expect.set_arity(3);
        for (auto& [e, c] : f.terms()) {
            int y = e[2], x = e[0] + e[1];
            if (y <= cap && x <= cap) expect.add_term(e, c);
        }
        CHECK(tab.reassemble() == expect);
    }
}

TEST_CASE("p-adic expansion: division invariant and reassembly") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> ex(0, 4);
    std::uniform_int_distribution<long> cf(-3, 3);
    RatPoly p = parse_unipoly("Y^2 + 1", "Y");
    for (int it = 0; it < 15; ++it) {
        MPoly<Rat> f;
        f.set_arity(2);
        for (int t = 0; t < 5; ++t) f.add_term({ex(rng), ex(rng)}, rat(cf(rng)));
        auto [q, r] = divrem_y(f, p);
        MPoly<Rat> py;
        py.set_arity(2);
        py.add_term({0, 2}, Rat(1));
        py.add_term({0, 0}, Rat(1));
        CHECK(q * py + r == f);
        CHECK(r.degree_in(1) < 2);

        auto parts = padic_of_poly(f, p, 4);
        MPoly<Rat> acc, pw(Rat(1), 2);
        acc.set_arity(2);
        for (const auto& a : parts) {
            acc += a * pw;
            pw *= py;
        }
        CHECK(acc == f);
    }
}

TEST_CASE("p-adic circuit execution matches the polynomial oracle") {
    Slp slp = parse_slp("inputs X Y\n"
                        "const c1 = 1\n"
                        "v1 = mul Y Y\n"
                        "v2 = mul v1 Y\n"
                        "v3 = mul X Y\n"
                        "v4 = add v2 v3\n"
                        "v5 = add v4 c1\n"
                        "output v5\n");
    for (const char* ptext : {"Y^2 + 1", "Y^2 + Y", "Y + 2"}) {
        RatPoly p = parse_unipoly(ptext, "Y");
        auto table = padic_extract<Rat>(slp, p, 4);
        auto oracle = padic_of_poly(expand_rat(slp), p, 4);
        for (int i = 0; i <= 4; ++i)
            CHECK(table.coeff(i) == oracle[static_cast<std::size_t>(i)]);
        CHECK(table.reassemble() == expand_rat(slp));
    }
}

TEST_CASE("trailing coefficient via the quotient ring") {
    // f = X*Y^2 + X^2*Y^3 has p-adic order 2 for p = Y
    Slp slp = parse_slp("inputs X Y\n"
                        "v1 = mul Y Y\n"
                        "v2 = mul X v1\n"
                        "v3 = mul v1 Y\n"
                        "v4 = mul X X\n"
                        "v5 = mul v4 v3\n"
                        "v6 = add v2 v5\n"
                        "output v6\n");
    RatPoly p = parse_unipoly("Y", "Y");
    auto r = trailing_coefficient(slp, p);
    CHECK(r.q == 2);
    CHECK(r.trailing == parse_mpoly("X", {"X", "Y"}));
    // the witness circuit specializes to the trailing coefficient
    auto w = expand_eps(r.circuit);
    CHECK(specialize(w) == r.trailing);
    // cross check against the table
    auto table = padic_extract<Rat>(slp, p, 5);
    CHECK(table.trailing_index() == 2);
    CHECK(table.coeff(2) == r.trailing);
}

TEST_CASE("division elimination on the geometric series") {
    Slp slp = parse_slp("mode: rational\n"
                        "inputs X\n"
                        "const c1 = 1\n"
                        "v1 = sub c1 X\n"
                        "v2 = div c1 v1\n"
                        "output v2\n");
    for (int bound : {1, 4, 8}) {
        auto res = eliminate_divisions(slp, {Rat(0)}, bound);
        CHECK(!res.slp.has_div());
        REQUIRE(res.slp.outputs.size() == static_cast<std::size_t>(bound) + 1);
        for (int d = 0; d <= bound; ++d) {
            MPoly<Rat> expect;
            expect.set_arity(1);
            expect.add_term(Expo{d}, Rat(1));
            CHECK(expand_rat(res.slp, d) == expect);
        }
    }
    // divisor vanishing at the point is rejected
    Slp bad = parse_slp("mode: rational\n"
                        "inputs X\n"
                        "const c1 = 1\n"
                        "v1 = div c1 X\n"
                        "output v1\n");
    CHECK_THROWS_AS(eliminate_divisions(bad, {Rat(0)}, 3), DivisorVanishesAtPoint);
}

} // TEST_SUITE
