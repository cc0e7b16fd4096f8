#include <doctest.h>

#include <random>

#include "slpfactor/eps.hpp"
#include "slpfactor/linsolve.hpp"
#include "slpfactor/mpoly.hpp"
#include "slpfactor/ratfunc.hpp"

using namespace slpfactor;

namespace {

Rat rrat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return rat(num(rng), den(rng));
}

RatPoly rpoly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rrat(rng);
    return RatPoly(std::move(c));
}

MPoly<Rat> rmpoly(std::mt19937& rng, std::size_t n, int terms) {
    std::uniform_int_distribution<int> ex(0, 3);
    MPoly<Rat> p;
    p.set_arity(n);
    for (int t = 0; t < terms; ++t) {
        Expo e(n);
        for (auto& k : e) k = ex(rng);
        p.add_term(std::move(e), rrat(rng));
    }
    return p;
}

Rat det3(const std::vector<std::vector<Rat>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

TEST_SUITE("arith") {

TEST_CASE("rational scalars form a field") {
    std::vector<Rat> xs = {rat(0), rat(1), rat(-1), rat(3, 2), rat(-7, 5)};
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                CHECK(a + (b + c) == (a + b) + c);
                CHECK(a * (b * c) == (a * b) * c);
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
            }
    for (const auto& a : xs) {
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        CHECK(a - a == Rat(0));
        if (!is_zero(a)) CHECK(a * inv(a) == Rat(1));
    }
    CHECK_THROWS_AS(inv(Rat(0)), DivisionByZero);
}

TEST_CASE("exact rational roots") {
    CHECK(rat_root(rat(8, 27), 3) == rat(2, 3));
    CHECK(rat_root(rat(9, 4), 2) == rat(3, 2));
    CHECK(rat_root(rat(1), 5) == rat(1));
    CHECK(!rat_root(rat(2), 2).has_value());
    CHECK(!rat_root(rat(-4), 2).has_value());
    CHECK(rat_root(rat(-8), 3) == rat(-2));
    CHECK(parse_rat(to_string(rat(-22, 7))) == rat(-22, 7));
}

TEST_CASE("unipoly division with remainder") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        RatPoly a = rpoly(rng, 6);
        RatPoly b = rpoly(rng, 3);
        if (b.is_zero_poly()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("unipoly gcd and Bezout identity") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        RatPoly a = rpoly(rng, 4);
        RatPoly b = rpoly(rng, 4);
        if (a.is_zero_poly() || b.is_zero_poly()) continue;
        RatPoly g = unipoly_gcd(a, b);
        auto [r0, r1] = std::pair{divrem(a, g).second, divrem(b, g).second};
        CHECK(r0.is_zero_poly());
        CHECK(r1.is_zero_poly());
        auto [gg, u, v] = unipoly_xgcd(a, b);
        CHECK(gg == g);
        CHECK(u * a + v * b == gg);
    }
    // common factor is detected
    RatPoly x = RatPoly::variable();
    RatPoly p = (x + RatPoly::constant(Rat(1))) * (x + RatPoly::constant(Rat(2)));
    RatPoly q = (x + RatPoly::constant(Rat(1))) * (x - RatPoly::constant(Rat(3)));
    CHECK(unipoly_gcd(p, q) == x + RatPoly::constant(Rat(1)));
}

TEST_CASE("eps scalars stay reduced with a monic denominator") {
    EpsScalar x = (EpsScalar(1) + EpsScalar::eps()) / EpsScalar::eps();
    CHECK(x.den().is_monic());
    CHECK(!x.defined_at_zero());
    CHECK(x.order() == -1);
    CHECK_THROWS_AS(x.at_zero(), NotDefinedAtZero);

    EpsScalar y = EpsScalar::eps() * x;  // 1 + eps again
    CHECK(y.defined_at_zero());
    CHECK(y.at_zero() == Rat(1));
    CHECK(y.order() == 0);

    EpsScalar z = EpsScalar::eps(3) / (EpsScalar(2) + EpsScalar::eps());
    CHECK(z.order() == 3);
    CHECK(z.compose_power(2).order() == 6);

    // field identities on a small sample
    std::vector<EpsScalar> xs = {EpsScalar(2), EpsScalar::eps(), x, z};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!is_zero(b)) CHECK((a / b) * b == a);
        }
    CHECK(parse_eps_scalar("(eps^2+eps)/(eps)") == EpsScalar::eps() + EpsScalar(1));
}

TEST_CASE("linear solve matches the Cramer oracle") {
    std::mt19937 rng(23);
    for (int it = 0; it < 25; ++it) {
        std::vector<std::vector<Rat>> a(3, std::vector<Rat>(3));
        for (auto& row : a)
            for (auto& v : row) v = rrat(rng);
        if (is_zero(det3(a))) continue;
        std::vector<Rat> b = {rrat(rng), rrat(rng), rrat(rng)};
        auto x = solve_linear<Rat>(a, b);
        // Cramer's rule, column by column.
        Rat d = det3(a);
        for (int col = 0; col < 3; ++col) {
            auto m = a;
            for (int r = 0; r < 3; ++r) m[r][static_cast<std::size_t>(col)] = b[static_cast<std::size_t>(r)];
            CHECK(x[static_cast<std::size_t>(col)] == det3(m) / d);
        }
        auto x2 = solve_linear<Rat>(a, b, PivotStrategy::LastNonzero);
        CHECK(x == x2);
    }
    std::vector<std::vector<Rat>> sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(solve_linear<Rat>(sing, {Rat(1), Rat(1)}), Singular);
    CHECK_THROWS_AS(
        solve_linear<Rat>({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}},
                          {Rat(1), Rat(1), Rat(3)}),
        Inconsistent);
}

TEST_CASE("linear solve over a rational function field") {
    using F = RatFunc<Rat>;
    MPoly<Rat> x = MPoly<Rat>::variable(0, 1);
    F fx{x};
    // [[1, x], [x, 1]] [a, b]^T = [1 + x^2, 2x]  =>  a = 1, b = x
    std::vector<std::vector<F>> a = {{F(1), fx}, {fx, F(1)}};
    std::vector<F> b = {F(1) + fx * fx, F(2) * fx};
    auto sol = solve_linear<F>(a, b);
    CHECK(sol[0] == F(1));
    CHECK(sol[1] == fx);
}

TEST_CASE("mpoly ring laws and exact division") {
    std::mt19937 rng(31);
    for (int it = 0; it < 25; ++it) {
        auto a = rmpoly(rng, 2, 3), b = rmpoly(rng, 2, 3), c = rmpoly(rng, 2, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero_poly()) {
            CHECK(exact_divide(a * b, b) == a);
            CHECK(divides(b, a * b));
        }
        // evaluation is a ring homomorphism
        std::vector<Rat> pt = {rrat(rng), rrat(rng)};
        CHECK((a * b).eval_point(pt) == a.eval_point(pt) * b.eval_point(pt));
        CHECK((a + b).eval_point(pt) == a.eval_point(pt) + b.eval_point(pt));
    }
    auto x = MPoly<Rat>::variable(0, 2), y = MPoly<Rat>::variable(1, 2);
    MPoly<Rat> one(Rat(1), 2);
    CHECK_FALSE(divides(x + one, x * y + one));
    // graded-lex leading term
    auto p = x * x + y * y * y;
    CHECK(p.leading_term().first == Expo{0, 3});
    // parser round trip
    auto q = parse_mpoly("3/2*X1^2*X2 + -1*X2^3 + 5", {"X1", "X2"});
    CHECK(parse_mpoly(to_string(q, {"X1", "X2"}), {"X1", "X2"}) == q);
}

} // TEST_SUITE
