#include "slpfactor/minpoly.hpp"

#include <functional>
#include <map>

namespace slpfactor {

MinPolySystem build_system(const TruncSeries<Rat>& phi, int d) {
    int precision = 2 * d * d;
    if (phi.bound() < precision)
        throw InsufficientPrecision("need parts up to degree " +
                                    std::to_string(precision));
    if (!phi.part(0).is_zero_poly())
        throw Inconsistent("series must have zero constant term");
    MinPolySystem sys;
    sys.d = d;
    sys.precision = precision;
    sys.n_x = phi.arity();
    sys.phi = TruncSeries<Rat>::from_poly(phi.to_poly(), precision);

    auto levels = static_cast<std::size_t>(precision) + 1;
    std::vector<MPoly<Rat>> cur(levels);
    for (auto& p : cur) p.set_arity(sys.n_x);
    cur[0] = MPoly<Rat>(Rat(1), sys.n_x);
    sys.psi_pow.push_back(cur);
    for (int i = 1; i <= d; ++i) {
        std::vector<MPoly<Rat>> next(levels);
        for (auto& p : next) p.set_arity(sys.n_x);
        for (std::size_t m = 0; m < levels; ++m)
            for (std::size_t k = 0; k <= m; ++k)
                next[m] += cur[k] * sys.phi.part(static_cast<int>(m - k));
        cur = next;
        sys.psi_pow.push_back(std::move(next));
    }
    return sys;
}

namespace {

std::vector<Expo> monomials_up_to(std::size_t n, int d) {
    std::vector<Expo> out;
    Expo e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

} // namespace

MPoly<Rat> solve_minpoly(const MinPolySystem& sys, PivotStrategy pivot) {
    const int d = sys.d;
    const std::size_t n_x = sys.n_x;

    // Scalar unknowns z_{i,mu}: Z_{i,|mu|} = sum z_{i,mu} X^mu. The i = d
    // row of unknowns is pinned (monic) and moved to the right-hand side.
    struct Unknown {
        int i;
        Expo mu;
    };
    std::vector<Unknown> unknowns;
    auto monos = monomials_up_to(n_x, d);
    for (int i = 0; i < d; ++i)
        for (const auto& mu : monos) unknowns.push_back({i, mu});

    // One scalar equation per (t, X-monomial of degree t) pair.
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int t = 0; t <= sys.precision; ++t) {
        std::map<Expo, std::size_t> rows;  // monomial -> row index
        auto row_of = [&](const Expo& rho) {
            auto it = rows.find(rho);
            if (it == rows.end()) {
                it = rows.emplace(rho, a.size()).first;
                a.emplace_back(unknowns.size(), Rat(0));
                b.emplace_back(Rat(0));
            }
            return it->second;
        };
        for (std::size_t ui = 0; ui < unknowns.size(); ++ui) {
            const auto& [i, mu] = unknowns[ui];
            int alpha = expo_total(mu);
            if (alpha > t) continue;
            const MPoly<Rat>& part =
                sys.psi_pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - alpha)];
            for (auto& [e, c] : part.terms()) {
                Expo rho = e;
                for (std::size_t k = 0; k < n_x; ++k) rho[k] += mu[k];
                a[row_of(rho)][ui] += c;
            }
        }
        // Pinned monic term: Z_{d,0} = 1 contributes psi^d's degree-t part.
        const MPoly<Rat>& top =
            sys.psi_pow[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)];
        for (auto& [e, c] : top.terms()) b[row_of(e)] -= c;
    }

    std::vector<Rat> z = solve_linear<Rat>(a, b, pivot);

    MPoly<Rat> g;
    g.set_arity(n_x + 1);
    for (std::size_t ui = 0; ui < unknowns.size(); ++ui) {
        if (is_zero(z[ui])) continue;
        Expo e = unknowns[ui].mu;
        e.push_back(unknowns[ui].i);
        g.add_term(std::move(e), z[ui]);
    }
    {
        Expo e(n_x + 1, 0);
        e[n_x] = d;
        g.add_term(std::move(e), Rat(1));
    }

    if (g.total_degree() > d)
        throw Inconsistent("reconstructed polynomial exceeds total degree d");
    // Substitute-back verification: g(X, phi) = 0 mod (X)^(precision+1).
    auto check = TruncSeries<Rat>(sys.precision, n_x);
    {
        std::vector<TruncSeries<Rat>> slices;
        for (int i = 0; i <= d; ++i) {
            MPoly<Rat> gi;
            gi.set_arity(n_x);
            for (auto& [e, c] : g.terms()) {
                if (e[n_x] != i) continue;
                Expo k(e.begin(), e.end() - 1);
                gi.add_term(std::move(k), c);
            }
            slices.push_back(TruncSeries<Rat>::from_poly(gi, sys.precision));
        }
        check = series_poly_compose(slices, sys.phi);
    }
    if (!check.is_zero_series())
        throw Inconsistent("substitute-back residual is nonzero");
    return g;
}

MPoly<Rat> reconstruct_factor(const NormalizedInstance& inst, LiftMode mode) {
    int precision = 2 * inst.d * inst.d;
    if (precision < 1) precision = 1;
    TruncSeries<Rat> phi(precision, static_cast<std::size_t>(inst.slp.arity()) - 1);
    if (mode == LiftMode::Approx) {
        phi = specialize_parts(newton_perturbed(inst.slp, precision));
    } else {
        phi = newton_implicit(expand_rat(inst.slp), precision);
    }
    MPoly<Rat> gt = solve_minpoly(build_system(phi, inst.d));
    MPoly<Rat> g = inst.transform.invert(gt);
    // Monic in Y by convention.
    std::size_t n = g.arity();
    Expo lead(n, 0);
    lead[n - 1] = g.degree_in(n - 1);
    Rat lc = g.coeff(lead);
    if (is_zero(lc)) throw Inconsistent("missing monic leading coefficient");
    return g.scaled(inv(lc));
}

MPoly<Rat> reconstruct_factor(const Slp& f, int d, long e,
                              const std::vector<Rat>& point,
                              const std::vector<Rat>& u, const Rat& v,
                              LiftMode mode) {
    return reconstruct_factor(normalize_instance(f, d, e, point, u, v), mode);
}

} // namespace slpfactor
