#include <doctest.h>

#include <random>

#include "slpfactor/slp.hpp"

using namespace slpfactor;

namespace {

std::vector<Slp> sample_circuits() {
    std::vector<Slp> out;
    out.push_back(parse_slp("inputs X Y\n"
                            "const c1 = 3/2\n"
                            "v1 = mul X X\n"
                            "v2 = add v1 Y\n"
                            "v3 = mul v2 c1\n"
                            "output v3\n"));
    out.push_back(parse_slp("inputs X1 X2 Y\n"
                            "const c1 = 2\n"
                            "v1 = mul X1 X2\n"
                            "v2 = sub Y v1\n"
                            "v3 = mul v2 v2\n"
                            "v4 = add v3 c1\n"
                            "output v4\n"));
    out.push_back(parse_slp("inputs Y\n"
                            "v1 = mul Y Y\n"
                            "v2 = mul v1 Y\n"
                            "v3 = add v2 Y\n"
                            "output v3\n"));
    return out;
}

} // namespace

TEST_SUITE("slp") {

TEST_CASE("text format round trip") {
    for (const auto& slp : sample_circuits()) {
        std::string t = to_text(slp);
        CHECK(to_text(parse_slp(t)) == t);
    }
    // div requires rational mode
    CHECK_THROWS_AS(parse_slp("inputs X\nv1 = div X X\noutput v1\n"), ParseError);
    CHECK_NOTHROW(parse_slp("mode: rational\ninputs X\nv1 = div X X\noutput v1\n"));
    // forward references are rejected
    CHECK_THROWS_AS(parse_slp("inputs X\nv1 = add v2 X\nv2 = add X X\noutput v2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_slp("inputs X\noutput v1\n"), ParseError);
}

TEST_CASE("evaluation agrees with expansion") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> val(-5, 5);
    for (const auto& slp : sample_circuits()) {
        MPoly<Rat> f = expand_rat(slp);
        for (int it = 0; it < 10; ++it) {
            std::vector<Rat> pt;
            for (int i = 0; i < slp.arity(); ++i) pt.push_back(rat(val(rng), 2));
            CHECK(eval_rat(slp, pt).at(0) == f.eval_point(pt));
        }
    }
}

TEST_CASE("builder folds identities and deduplicates constants") {
    SlpBuilder b({"X"});
    auto x = b.input(0);
    auto zero = b.constant(Rat(0));
    auto one = b.constant(Rat(1));
    CHECK(b.add(x, zero) == x);
    CHECK(b.sub(x, zero) == x);
    CHECK(b.mul(x, one) == x);
    CHECK(b.is_const(b.mul(x, zero)));
    CHECK(b.length() == 0);
    CHECK(b.constant(Rat(1)) == one);
    auto two = b.add(one, one);  // constant folding, no node
    CHECK(b.is_const(two));
    CHECK(b.const_value(two) == EpsScalar(2));
    CHECK(b.length() == 0);
}

TEST_CASE("substitute_linear: oracle and node bound") {
    for (const auto& slp : sample_circuits()) {
        auto n = static_cast<std::size_t>(slp.arity());
        std::vector<Rat> u(n - 1, rat(1, 2));
        Rat v = rat(-2);
        std::vector<Rat> shift(n, Rat(0));
        auto res = substitute_linear(slp, u, v, shift);
        CHECK(res.slp.length() <= slp.length() + 2 * static_cast<int>(n));
        MPoly<Rat> f = expand_rat(slp);
        CHECK(expand_rat(res.slp) == res.record.apply(f));
        // invert undoes apply
        CHECK(res.record.invert(res.record.apply(f)) == f);
    }
    // with shifts the inverse property still holds
    Slp slp = sample_circuits()[0];
    auto res = substitute_linear(slp, {rat(1, 3)}, rat(2), {Rat(1), rat(-1, 2)});
    MPoly<Rat> f = expand_rat(slp);
    CHECK(expand_rat(res.slp) == res.record.apply(f));
    CHECK(res.record.invert(res.record.apply(f)) == f);
}

TEST_CASE("perturb shifts Y and subtracts the eps constant term") {
    for (const auto& slp : sample_circuits()) {
        Slp big = perturb(slp);
        CHECK(big.length() <= slp.length() + 2);
        // oracle: F = f(X, Y+eps) - f(0, eps)
        MPoly<EpsScalar> f = expand_eps(slp);
        auto n = static_cast<std::size_t>(slp.arity());
        std::vector<MPoly<EpsScalar>> imgs;
        for (std::size_t i = 0; i + 1 < n; ++i)
            imgs.push_back(MPoly<EpsScalar>::variable(i, n));
        imgs.push_back(MPoly<EpsScalar>::variable(n - 1, n) +
                       MPoly<EpsScalar>(EpsScalar::eps(), n));
        MPoly<EpsScalar> shifted = f.substitute(imgs);
        std::vector<MPoly<EpsScalar>> at0(n, MPoly<EpsScalar>(EpsScalar(0), n));
        at0[n - 1] = MPoly<EpsScalar>(EpsScalar::eps(), n);
        MPoly<EpsScalar> corner = f.substitute(at0);
        CHECK(expand_eps(big) == shifted - corner);
        // F(0, 0) = 0 by construction
        std::vector<EpsScalar> zeros(n, EpsScalar(0));
        CHECK(is_zero(eval_eps(big, zeros).at(0)));
    }
}

TEST_CASE("dead node removal preserves the outputs") {
    Slp slp = parse_slp("inputs X\n"
                        "v1 = mul X X\n"
                        "v2 = add X X\n"
                        "v3 = mul v1 X\n"
                        "output v3\n");
    Slp trimmed = slp.without_dead_nodes();
    CHECK(trimmed.length() == 2);
    CHECK(expand_rat(trimmed) == expand_rat(slp));
}

TEST_CASE("complexity report counts nonscalar multiplications") {
    Slp slp = parse_slp("inputs X\n"
                        "const c1 = 5\n"
                        "v1 = mul X c1\n"
                        "v2 = mul X X\n"
                        "v3 = add v1 v2\n"
                        "output v3\n");
    auto rep = complexity_report(slp);
    CHECK(rep.length == 3);
    CHECK(rep.mul_count == 1);  // v1 is a scalar multiplication
}

TEST_CASE("compose_approx splices and picks the eps exponent") {
    // outer(X, T) = T^2; inner = X + eps; composition specializes to X^2.
    Slp outer = parse_slp("inputs X T\nv1 = mul T T\noutput v1\n");
    Slp inner = parse_slp("inputs X\nconst c1 = (eps)\nv1 = add X c1\noutput v1\n");
    auto res = compose_approx(outer, inner);
    CHECK(res.chosen_n >= 1);
    auto spec = specialize_fraction(expand_ratfunc(res.slp));
    CHECK(spec == RatFunc<Rat>(parse_mpoly("X^2", {"X"})));
}

TEST_CASE("slp_from_mpoly computes its polynomial") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> ex(0, 3);
    std::uniform_int_distribution<long> cf(-4, 4);
    for (int it = 0; it < 10; ++it) {
        MPoly<Rat> p;
        p.set_arity(2);
        for (int t = 0; t < 4; ++t)
            p.add_term({ex(rng), ex(rng)}, rat(cf(rng), 3));
        Slp slp = slp_from_mpoly(p, {"X", "Y"});
        CHECK(expand_rat(slp) == p);
    }
}

} // TEST_SUITE
