#include "slpfactor/newton.hpp"

#include <algorithm>

namespace slpfactor {

namespace {

std::vector<mpz_class> positive_divisors(mpz_class m) {
    if (m < 0) m = -m;
    std::vector<mpz_class> out;
    if (m == 0) return out;
    for (mpz_class i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            out.push_back(i);
            if (i * i != m) out.push_back(m / i);
        }
    }
    return out;
}

// Coefficients of Y^i as polynomials in the X-variables only.
template <class S>
std::vector<MPoly<S>> y_slices(const MPoly<S>& f, std::size_t n) {
    int dy = f.degree_in(n - 1);
    std::vector<MPoly<S>> out(static_cast<std::size_t>(std::max(dy, 0)) + 1);
    for (auto& s : out) s.set_arity(n - 1);
    for (auto& [e, c] : f.terms()) {
        Expo k = e;
        k.resize(n, 0);
        int i = k[n - 1];
        k.resize(n - 1);
        out[static_cast<std::size_t>(i)].add_term(std::move(k), c);
    }
    return out;
}

template <class S>
TruncSeries<S> newton_iterate(const std::vector<MPoly<S>>& slices,
                              std::size_t n_x, int bound) {
    std::size_t dy = slices.size() - 1;
    std::vector<MPoly<S>> dslices(std::max<std::size_t>(dy, 1));
    for (auto& s : dslices) s.set_arity(n_x);
    for (std::size_t i = 1; i <= dy; ++i)
        dslices[i - 1] = slices[i].scaled(S(static_cast<long>(i)));

    TruncSeries<S> phi(0, n_x);
    long correct = 1;  // phi is correct mod (X)^correct
    while (correct <= bound) {
        int nb = static_cast<int>(std::min<long>(2 * correct - 1, bound));
        phi = TruncSeries<S>::from_poly(phi.to_poly(), nb);
        std::vector<TruncSeries<S>> f, fy;
        for (const auto& s : slices) f.push_back(TruncSeries<S>::from_poly(s, nb));
        for (const auto& s : dslices) fy.push_back(TruncSeries<S>::from_poly(s, nb));
        TruncSeries<S> val = series_poly_compose(f, phi);
        TruncSeries<S> dval = series_poly_compose(fy, phi);
        phi = phi - series_div(val, dval);
        correct *= 2;
    }
    if (phi.bound() < bound)
        phi = TruncSeries<S>::from_poly(phi.to_poly(), bound);
    return phi;
}

} // namespace

std::vector<Rat> rational_roots(const RatPoly& p) {
    if (p.is_zero_poly()) throw ZeroPolynomial("roots of the zero polynomial");
    // Clear denominators to integer coefficients.
    mpz_class lcm(1);
    for (long i = 0; i <= p.degree(); ++i)
        lcm = lcm / gcd(lcm, p.coeff(i).get_den()) * p.coeff(i).get_den();
    std::vector<mpz_class> a;
    for (long i = 0; i <= p.degree(); ++i) {
        mpq_class c = p.coeff(i) * Rat(lcm);
        a.push_back(c.get_num());
    }
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= a.size()) return roots;  // monomial: only the root 0
    for (const auto& num : positive_divisors(a[low]))
        for (const auto& den : positive_divisors(a.back()))
            for (int sign : {1, -1}) {
                Rat cand(sign * num, den);
                cand.canonicalize();
                if (is_zero(p.eval_scalar(cand)) &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) {
        Rat ax = abs(x), ay = abs(y);
        if (ax != ay) return ax < ay;
        return x > y;  // positive first
    });
    return roots;
}

std::vector<std::vector<Rat>> rational_grid(std::size_t dim, long box) {
    std::vector<Rat> values;
    for (long q = 1; q <= box; ++q)
        for (long p = -box; p <= box; ++p) {
            Rat v(p, q);
            v.canonicalize();
            if (std::find(values.begin(), values.end(), v) == values.end())
                values.push_back(v);
        }
    std::vector<std::vector<Rat>> tuples{{}};
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::vector<Rat>> next;
        for (const auto& t : tuples)
            for (const auto& v : values) {
                auto u = t;
                u.push_back(v);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    auto height = [](const std::vector<Rat>& t) {
        mpz_class den(1);
        Rat mx(0);
        for (const auto& v : t) {
            den = std::max(den, mpz_class(v.get_den()));
            mx = std::max(mx, Rat(abs(v)));
        }
        return std::pair<mpz_class, Rat>(den, mx);
    };
    std::sort(tuples.begin(), tuples.end(),
              [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
                  auto hx = height(x), hy = height(y);
                  if (hx.first != hy.first) return hx.first < hy.first;
                  if (hx.second != hy.second) return hx.second < hy.second;
                  for (std::size_t i = 0; i < x.size(); ++i)
                      if (x[i] != y[i]) return x[i] < y[i];
                  return false;
              });
    return tuples;
}

SmoothPoint find_smooth_point(const MPoly<Rat>& g, const MPoly<Rat>& h,
                              long search_box) {
    std::size_t n = std::max({g.arity(), h.arity(), std::size_t{1}});
    MPoly<Rat> gg = g, hh = h;
    gg.set_arity(n);
    hh.set_arity(n);
    std::vector<MPoly<Rat>> grads;
    for (std::size_t i = 0; i < n; ++i) grads.push_back(gg.derivative(i));

    auto accept = [&](const std::vector<Rat>& p) -> std::optional<SmoothPoint> {
        if (!is_zero(gg.eval_point(p))) return std::nullopt;
        Rat hv = hh.eval_point(p);
        if (is_zero(hv)) return std::nullopt;
        std::vector<Rat> grad;
        bool nonzero = false;
        for (auto& gi : grads) {
            grad.push_back(gi.eval_point(p));
            if (!is_zero(grad.back())) nonzero = true;
        }
        if (!nonzero) return std::nullopt;
        return SmoothPoint{p, Rat(0), hv, std::move(grad)};
    };

    for (const auto& xi : rational_grid(n - 1, search_box)) {
        // Restriction of g to the vertical line over xi.
        std::vector<RatPoly> images;
        for (const auto& c : xi) images.push_back(RatPoly::constant(c));
        images.push_back(RatPoly::variable());
        RatPoly gline = gg.eval(images, [](const Rat& c) { return RatPoly::constant(c); });
        std::vector<Rat> etas;
        if (gline.is_zero_poly()) {
            for (const auto& t : rational_grid(1, search_box)) etas.push_back(t[0]);
        } else if (gline.degree() == 0) {
            continue;
        } else {
            etas = rational_roots(gline);
        }
        for (const auto& eta : etas) {
            auto p = xi;
            p.push_back(eta);
            if (auto sp = accept(p)) return *sp;
        }
    }
    throw NotFound("no rational smooth point within the search box");
}

NormalizedInstance normalize_instance(const Slp& f, int d, long e,
                                      const std::vector<Rat>& point,
                                      const std::vector<Rat>& u, const Rat& v) {
    auto res = substitute_linear(f, u, v, point);
    return NormalizedInstance{std::move(res.slp), d, e, std::move(res.record)};
}

NormalizedInstance normalize_with_witness(const Slp& f, const MPoly<Rat>& g,
                                          const MPoly<Rat>& h, long e,
                                          long search_box) {
    auto n = static_cast<std::size_t>(f.arity());
    SmoothPoint sp = find_smooth_point(g, h, search_box);
    int d = g.total_degree();
    auto try_uv = [&](const std::vector<Rat>& u, const Rat& v)
        -> std::optional<NormalizedInstance> {
        if (is_zero(v)) return std::nullopt;
        TransformRecord rec{u, v, sp.point};
        MPoly<Rat> gt = rec.apply(g);
        if (gt.degree_in(n - 1) != d) return std::nullopt;
        std::vector<Rat> origin(n, Rat(0));
        if (is_zero(gt.derivative(n - 1).eval_point(origin))) return std::nullopt;
        return normalize_instance(f, d, e, sp.point, u, v);
    };
    std::vector<Rat> zero_u(n - 1, Rat(0));
    if (auto r = try_uv(zero_u, Rat(1))) return *r;
    for (const auto& u : rational_grid(n - 1, 3))
        for (long vv : {1, -1, 2, -2, 3, -3})
            if (auto r = try_uv(u, Rat(vv))) return *r;
    throw NotFound("no admissible mixing substitution found");
}

TruncSeries<Rat> newton_implicit(const MPoly<Rat>& g, int bound) {
    std::size_t n = g.arity();
    if (n == 0) throw ArityMismatch("implicit function needs at least Y");
    std::vector<Rat> origin(n, Rat(0));
    if (!is_zero(g.eval_point(origin)))
        throw SingularPoint("g(0,0) != 0");
    if (is_zero(g.derivative(n - 1).eval_point(origin)))
        throw SingularPoint("d_Y g vanishes at the origin");
    return newton_iterate(y_slices(g, n), n - 1, bound);
}

TruncSeries<EpsScalar> newton_perturbed(const Slp& f, int bound) {
    auto n = static_cast<std::size_t>(f.arity());
    if (n == 0) throw ArityMismatch("circuit has no Y input");
    if (bound < 1) throw ArityMismatch("bound must be >= 1");
    Slp big = perturb(f);
    // Exact in Y, truncated in X at the working degree.
    MPoly<EpsScalar> fm = detail::eval_bitruncated<EpsScalar>(big, -1, bound, 0);
    fm.set_arity(n);
    auto slices = y_slices(fm, n);
    std::vector<EpsScalar> origin(n - 1, EpsScalar(Rat(0)));
    if (slices.size() < 2 || is_zero(slices[1].eval_point(origin)))
        throw PerturbationDegenerate("d_Y F(0,0) vanishes identically");
    return newton_iterate(slices, n - 1, bound);
}

TruncSeries<Rat> specialize_parts(const TruncSeries<EpsScalar>& phi) {
    TruncSeries<Rat> out(phi.bound(), phi.arity());
    auto names = default_var_names(phi.arity(), false);
    for (int d = 0; d <= phi.bound(); ++d) {
        MPoly<Rat> part;
        part.set_arity(phi.arity());
        for (auto& [e, c] : phi.part(d).terms()) {
            if (!c.defined_at_zero()) {
                MPoly<Rat> mono;
                mono.add_term(e, Rat(1));
                throw PartNotDefinedAtZero(
                    "part delta=" + std::to_string(d) + ", monomial " +
                    to_string(mono, names) + " has an eps-pole");
            }
            part.add_term(e, c.at_zero());
        }
        out.set_part(d, std::move(part));
    }
    return out;
}

} // namespace slpfactor
