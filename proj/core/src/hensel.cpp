#include "slpfactor/hensel.hpp"

#include <algorithm>

namespace slpfactor {

namespace {

// A univariate polynomial in Y as a multivariate element of full arity.
MPoly<Rat> embed_y(const RatPoly& p, std::size_t n) {
    MPoly<Rat> out;
    out.set_arity(n);
    for (long j = 0; j <= p.degree(); ++j) {
        if (is_zero(p.coeff(j))) continue;
        Expo e(n, 0);
        e[n - 1] = static_cast<int>(j);
        out.add_term(std::move(e), p.coeff(j));
    }
    return out;
}

// X-homogeneous part of degree delta (Y does not count).
MPoly<Rat> x_part(const MPoly<Rat>& p, int delta) {
    MPoly<Rat> out;
    out.set_arity(p.arity());
    for (auto& [e, c] : p.terms()) {
        int y = e.empty() ? 0 : e.back();
        if (expo_total(e) - y == delta) out.add_term(e, c);
    }
    return out;
}

// Degree in Y of the circuit's output, sampled on a few generic lines.
int sample_deg_y(const Slp& f) {
    auto n = static_cast<std::size_t>(f.arity());
    std::vector<Rat> consts;
    for (std::size_t k = 0; k < f.constants.size(); ++k)
        consts.push_back(f.constant_as_rat(static_cast<int>(k)));
    int best = -1;
    for (long trial = 1; trial <= 3; ++trial) {
        std::vector<RatPoly> point;
        for (std::size_t i = 0; i + 1 < n; ++i)
            point.push_back(RatPoly::constant(
                Rat(2 * trial + static_cast<long>(3 * i) + 1, trial + 1)));
        point.push_back(RatPoly::variable());
        auto vals = eval_slp(f, point, [&, j = std::size_t{0}](const EpsScalar&) mutable {
            return RatPoly::constant(consts[j++]);
        });
        best = std::max(best, static_cast<int>(vals.at(0).degree()));
    }
    return best;
}

} // namespace

MPoly<Rat> HenselState::g_partial() const {
    MPoly<Rat> acc;
    acc.set_arity(arity);
    for (int delta = 0; delta <= s; ++delta)
        acc += g_parts[static_cast<std::size_t>(delta)];
    return acc;
}

MPoly<Rat> HenselState::h_partial() const {
    MPoly<Rat> acc;
    acc.set_arity(arity);
    for (int delta = 0; delta <= s; ++delta)
        acc += h_parts[static_cast<std::size_t>(delta)];
    return acc;
}

HenselState hensel_init(const Slp& f, const RatPoly& g0, const RatPoly& h0,
                        long e, int d) {
    if (e < 1) throw ArityMismatch("multiplicity must be positive");
    if (g0.degree() != d || !g0.is_monic())
        throw ArityMismatch("g0 must be monic of degree d");
    auto n = static_cast<std::size_t>(f.arity());
    if (n == 0) throw ArityMismatch("circuit has no Y input");

    auto [gcd, u, v] = unipoly_xgcd(h0, g0);
    if (gcd.degree() != 0) throw NotCoprime("g0 and h0 share a factor");

    // Specialization check at X = 0.
    {
        std::vector<Rat> consts;
        for (std::size_t k = 0; k < f.constants.size(); ++k)
            consts.push_back(f.constant_as_rat(static_cast<int>(k)));
        std::vector<RatPoly> origin(n - 1, RatPoly());
        origin.push_back(RatPoly::variable());
        auto vals = eval_slp(f, origin, [&, j = std::size_t{0}](const EpsScalar&) mutable {
            return RatPoly::constant(consts[j++]);
        });
        if (!(vals.at(0) == g0.pow(static_cast<unsigned long>(e)) * h0))
            throw SpecializationMismatch("f(0,Y) != g0^e * h0");
    }

    int dy = std::max(sample_deg_y(f),
                      static_cast<int>(d * e + std::max(h0.degree(), 0L)));
    int levels = dy / d + 1;

    HenselState st;
    st.d = d;
    st.e = e;
    st.arity = n;
    st.s = 0;
    st.g0 = g0;
    st.h0 = h0;
    st.u = u;
    st.v = v;
    st.order_budget = static_cast<long>(d) * e;
    st.f_table = padic_extract<Rat>(f, g0, levels, /*x_bound=*/d);
    st.g_parts.assign(static_cast<std::size_t>(d) + 1, MPoly<Rat>());
    st.h_parts.assign(static_cast<std::size_t>(d) + 1, MPoly<Rat>());
    for (auto& p : st.g_parts) p.set_arity(n);
    for (auto& p : st.h_parts) p.set_arity(n);
    st.g_parts[0] = embed_y(g0, n);
    st.h_parts[0] = embed_y(h0, n);
    return st;
}

void hensel_step(HenselState& state) {
    if (state.s >= state.d) throw OrderExhausted("all parts already lifted");
    if (state.order_budget < state.e)
        throw OrderExhausted("p-adic order budget exhausted");
    const int s1 = state.s + 1;
    const std::size_t n = state.arity;
    const auto eu = static_cast<unsigned long>(state.e);
    MPoly<Rat> g0m = embed_y(state.g0, n);
    MPoly<Rat> h0m = embed_y(state.h0, n);

    // (G^e * H) to X-degree s+1 in the g0-adic ring, binary powering.
    int levels = state.f_table.bound();
    auto to_elem = [&](const MPoly<Rat>& p) {
        detail::PadicElem<Rat> el;
        el.levels = padic_of_poly(p, state.g0, levels);
        return el;
    };
    detail::PadicElem<Rat> acc = to_elem(MPoly<Rat>(Rat(1), n));
    {
        detail::PadicElem<Rat> base = to_elem(state.g_partial());
        unsigned long exp = eu;
        while (exp > 0) {
            if (exp & 1) acc = detail::padic_mul(acc, base, state.g0, s1);
            if (exp >>= 1) base = detail::padic_mul(base, base, state.g0, s1);
        }
        acc = detail::padic_mul(acc, to_elem(state.h_partial()), state.g0, s1);
    }
    // Defect at X-degree s+1.
    MPoly<Rat> delta;
    delta.set_arity(n);
    {
        MPoly<Rat> pw(Rat(1), n);
        for (int i = 0; i <= levels; ++i) {
            delta += (x_part(state.f_table.coeff(i), s1) -
                      x_part(acc.levels[static_cast<std::size_t>(i)], s1)) *
                     pw;
            pw *= g0m;
        }
    }

    // e * g^(s+1) is the (e-1)th g0-adic coefficient of u * delta.
    MPoly<Rat> udelta = embed_y(state.u, n) * delta;
    auto uexp = padic_of_poly(udelta, state.g0, static_cast<int>(state.e) - 1);
    MPoly<Rat> gnext = uexp.back().scaled(Rat(1, state.e));

    MPoly<Rat> hnext;
    try {
        MPoly<Rat> q = delta;
        if (state.e > 1) q = exact_divide(delta, power(g0m, eu - 1));
        hnext = exact_divide(q - gnext.scaled(Rat(state.e)) * h0m, g0m);
    } catch (const InexactDivision&) {
        throw OrderExhausted("defect is not divisible by the expected g0 power");
    }

    state.g_parts[static_cast<std::size_t>(s1)] = std::move(gnext);
    state.h_parts[static_cast<std::size_t>(s1)] = std::move(hnext);
    state.s = s1;
    state.order_budget -= state.e;
}

MPoly<Rat> hensel_factor(const Slp& f, const RatPoly& g0, const RatPoly& h0,
                         long e, int d) {
    HenselState st = hensel_init(f, g0, h0, e, d);
    for (int s = 0; s < d; ++s) hensel_step(st);
    return st.g_partial();
}

MPoly<Rat> eth_root(const Slp& f, long e, int d) {
    if (e < 1) throw ArityMismatch("root exponent must be positive");
    auto n = static_cast<std::size_t>(f.arity());
    auto eu = static_cast<unsigned long>(e);
    std::vector<Rat> origin(n, Rat(0));
    Rat f0 = eval_rat(f, origin).at(0);
    auto root0 = rat_root(f0, eu);
    if (!root0) throw NotAPerfectPower("constant term is not an e-th power");

    // Newton for (1 + phi)^e = f / f(0) in truncated series.
    std::vector<TruncSeries<Rat>> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(TruncSeries<Rat>::from_poly(MPoly<Rat>::variable(i, n), d));
    std::vector<Rat> consts;
    for (std::size_t k = 0; k < f.constants.size(); ++k)
        consts.push_back(f.constant_as_rat(static_cast<int>(k)));
    TruncSeries<Rat> fs =
        eval_slp(f, vars, [&, j = std::size_t{0}](const EpsScalar&) mutable {
            return TruncSeries<Rat>::from_poly(MPoly<Rat>(consts[j++], n), d);
        }).at(0);
    fs = fs.scaled(inv(f0));

    TruncSeries<Rat> one = TruncSeries<Rat>::from_poly(MPoly<Rat>(Rat(1), n), d);
    TruncSeries<Rat> phi(d, n);
    long correct = 1;
    while (correct <= d) {
        // phi <- -1/e + (1 - 1/e) phi + (1/e) f (1 + phi)^(1-e)
        TruncSeries<Rat> base = one + phi;
        TruncSeries<Rat> pw = one;
        for (long k = 0; k + 1 < e; ++k) pw = pw * base;
        phi = phi.scaled(Rat(e - 1, e)) + series_div(fs, pw).scaled(Rat(1, e)) -
              one.scaled(Rat(1, e));
        correct *= 2;
    }
    MPoly<Rat> g = (one + phi).to_poly().scaled(*root0);
    MPoly<Rat> check = power(g, eu);
    if (!(check == expand_rat(f)))
        throw NotAPerfectPower("residual after e-th root is nonzero");
    return g;
}

} // namespace slpfactor
