#include <doctest.h>

#include <algorithm>

#include "slpfactor/newton.hpp"

using namespace slpfactor;

namespace {

// g(X, phi) as a truncated series, via Horner in the Y-slices of g.
TruncSeries<Rat> eval_at_series(const MPoly<Rat>& g, const TruncSeries<Rat>& phi) {
    std::size_t n = g.arity();
    int dy = g.degree_in(n - 1);
    std::vector<TruncSeries<Rat>> slices;
    for (int i = 0; i <= dy; ++i) {
        MPoly<Rat> gi;
        gi.set_arity(n - 1);
        for (auto& [e, c] : g.terms()) {
            if (e[n - 1] != i) continue;
            Expo k(e.begin(), e.end() - 1);
            gi.add_term(std::move(k), c);
        }
        slices.push_back(TruncSeries<Rat>::from_poly(gi, phi.bound()));
    }
    return series_poly_compose(slices, phi);
}

} // namespace

TEST_SUITE("newton") {

TEST_CASE("implicit series for a quadratic") {
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", {"X", "Y"});
    auto phi = newton_implicit(g, 6);
    CHECK(phi.to_poly() ==
          parse_mpoly("1/2*X^2 + -1/8*X^4 + 1/16*X^6", {"X"}));
    CHECK(eval_at_series(g, phi).is_zero_series());
}

TEST_CASE("implicit series with non-algebraic-looking coefficients") {
    // Y = X - X^2 + 2X^3 - 5X^4 + ... for Y - X + Y^2... use g = Y + Y^2 - X
    MPoly<Rat> g = parse_mpoly("Y + Y^2 + -1*X", {"X", "Y"});
    auto phi = newton_implicit(g, 4);
    CHECK(phi.to_poly() ==
          parse_mpoly("X + -1*X^2 + 2*X^3 + -5*X^4", {"X"}));
}

TEST_CASE("singular origin is rejected") {
    MPoly<Rat> g = parse_mpoly("Y^2 + -1*X", {"X", "Y"});
    CHECK_THROWS_AS(newton_implicit(g, 4), SingularPoint);
    MPoly<Rat> g2 = parse_mpoly("Y + 1 + -1*X", {"X", "Y"});  // g(0,0) != 0
    CHECK_THROWS_AS(newton_implicit(g2, 4), SingularPoint);
}

TEST_CASE("quadratic convergence of the explicit iteration") {
    for (const char* gt : {"Y^2 + 2*Y + -1*X^2", "Y + Y^2 + -1*X",
                           "Y^3 + Y + -1*X"}) {
        MPoly<Rat> g = parse_mpoly(gt, {"X", "Y"});
        MPoly<Rat> dg = g.derivative(1);
        const int bound = 15;
        TruncSeries<Rat> phi(bound, 1);
        for (int nu = 1; nu <= 4; ++nu) {
            phi = phi - series_div(eval_at_series(g, phi),
                                   eval_at_series(dg, phi));
            auto res = eval_at_series(g, phi);
            for (int d = 0; d < (1 << nu); ++d)
                CHECK(res.part(d).is_zero_poly());
        }
    }
}

TEST_CASE("rational roots of univariate polynomials") {
    RatPoly x = RatPoly::variable();
    // (2x - 1)(x + 3)(3x + 2)
    RatPoly p = (x.scaled(Rat(2)) - RatPoly::constant(Rat(1))) *
                (x + RatPoly::constant(Rat(3))) *
                (x.scaled(Rat(3)) + RatPoly::constant(Rat(2)));
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(is_zero(p.eval_scalar(r)));
    CHECK(std::find(roots.begin(), roots.end(), rat(1, 2)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), rat(-3)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), rat(-2, 3)) != roots.end());
    // x^2 + 1 has none
    CHECK(rational_roots(x * x + RatPoly::constant(Rat(1))).empty());
}

TEST_CASE("smooth point search verifies all conditions") {
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 1", {"X", "Y"});
    auto sp = find_smooth_point(g, h, 4);
    CHECK(is_zero(sp.g_value));
    CHECK(!is_zero(sp.h_value));
    CHECK(is_zero(g.eval_point(sp.point)));
    CHECK(!is_zero(h.eval_point(sp.point)));
    bool grad_nonzero = false;
    for (const auto& c : sp.gradient)
        if (!is_zero(c)) grad_nonzero = true;
    CHECK(grad_nonzero);
    // no rational point at all -> NotFound
    MPoly<Rat> circle = parse_mpoly("X^2 + Y^2 + 1", {"X", "Y"});
    CHECK_THROWS_AS(find_smooth_point(circle, h, 3), NotFound);
}

TEST_CASE("perturbed lift specializes to the implicit series") {
    // f = g^2 with g = Y^2 + 2Y - X^2; the eps-perturbed iterate converges
    // partwise to the implicit function of g.
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", {"X", "Y"});
    MPoly<Rat> f = g * g;
    Slp slp = slp_from_mpoly(f, {"X", "Y"});
    auto big = newton_perturbed(slp, 6);
    auto parts = specialize_parts(big);
    CHECK(parts == newton_implicit(g, 6));
}

TEST_CASE("normalization in blind mode records the transform") {
    MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", {"X", "Y"});
    MPoly<Rat> h = parse_mpoly("Y + 2", {"X", "Y"});
    Slp slp = slp_from_mpoly(g * g * h, {"X", "Y"});
    auto inst = normalize_instance(slp, 2, 2, {Rat(0), Rat(0)}, {Rat(0)}, Rat(1));
    CHECK(inst.d == 2);
    CHECK(inst.e == 2);
    CHECK(expand_rat(inst.slp) == expand_rat(slp));  // identity transform
    auto inst2 = normalize_with_witness(slp, g, h, 2);
    CHECK(expand_rat(inst2.slp) ==
          inst2.transform.apply(expand_rat(slp)));
}

} // TEST_SUITE
