#ifndef SLPFACTOR_PADIC_HPP
#define SLPFACTOR_PADIC_HPP

#include "slpfactor/series.hpp"

namespace slpfactor {

template <class S>
S scalar_from_rat(const Rat& c) {
    if constexpr (std::is_same_v<S, Rat>) return c;
    else return S(c);
}

// Division with remainder by a monic polynomial p in the last variable Y:
// f = q * p(Y) + r with deg_Y r < deg p. Coefficients of p are rational.
template <class S>
std::pair<MPoly<S>, MPoly<S>> divrem_y(const MPoly<S>& f, const RatPoly& p) {
    long d = p.degree();
    if (d < 1) throw ArityMismatch("p-adic base must have degree >= 1");
    if (!is_one(p.coeff(d))) throw ArityMismatch("p-adic base must be monic");
    std::size_t n = f.arity();
    if (n == 0) n = 1;
    MPoly<S> rem = f, quo;
    rem.set_arity(n);
    quo.set_arity(n);
    std::size_t yvar = n - 1;
    while (rem.degree_in(yvar) >= static_cast<int>(d)) {
        // Strip the top Y-layer in one pass.
        int top = rem.degree_in(yvar);
        MPoly<S> layer;  // coefficient of Y^top, shifted down to Y^(top-d)
        layer.set_arity(n);
        for (auto& [e, c] : rem.terms()) {
            if (e[yvar] != top) continue;
            Expo k = e;
            k[yvar] = top - static_cast<int>(d);
            layer.add_term(std::move(k), c);
        }
        quo += layer;
        // rem -= layer * p(Y)
        for (long j = 0; j <= d; ++j) {
            Rat pj = p.coeff(j);
            if (is_zero(pj)) continue;
            for (auto& [e, c] : layer.terms()) {
                Expo k = e;
                k[yvar] += static_cast<int>(j);
                rem.add_term(std::move(k), -(c * scalar_from_rat<S>(pj)));
            }
        }
    }
    return {std::move(quo), std::move(rem)};
}

// p-adic coefficients a_0..a_D of f: f = sum a_i p^i with deg_Y a_i < deg p.
template <class S>
std::vector<MPoly<S>> padic_of_poly(const MPoly<S>& f, const RatPoly& p, int bound) {
    std::vector<MPoly<S>> out;
    MPoly<S> cur = f;
    for (int i = 0; i <= bound; ++i) {
        auto [q, r] = divrem_y(cur, p);
        out.push_back(std::move(r));
        cur = std::move(q);
        if (cur.is_zero_poly()) break;
    }
    out.resize(static_cast<std::size_t>(bound) + 1);
    return out;
}

template <class S>
class PadicTable {
public:
    PadicTable(RatPoly base, int bound, std::size_t arity)
        : base_(std::move(base)), bound_(bound), arity_(arity) {
        coeffs_.assign(static_cast<std::size_t>(bound) + 1, MPoly<S>());
    }

    const RatPoly& base() const { return base_; }
    int bound() const { return bound_; }
    std::size_t arity() const { return arity_; }

    const MPoly<S>& coeff(int i) const {
        static const MPoly<S> kZero;
        if (i < 0 || i > bound_) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    void set_coeff(int i, MPoly<S> c) {
        coeffs_.at(static_cast<std::size_t>(i)) = std::move(c);
    }

    // Index of the first nonzero coefficient; -1 when all vanish.
    int trailing_index() const {
        for (int i = 0; i <= bound_; ++i)
            if (!coeff(i).is_zero_poly()) return i;
        return -1;
    }

    MPoly<S> reassemble() const {
        std::size_t n = arity_;
        MPoly<S> py;  // base as a polynomial in the last variable
        py.set_arity(n);
        for (long j = 0; j <= base_.degree(); ++j) {
            if (is_zero(base_.coeff(j))) continue;
            Expo e(n, 0);
            e[n - 1] = static_cast<int>(j);
            py.add_term(std::move(e), scalar_from_rat<S>(base_.coeff(j)));
        }
        MPoly<S> acc, pw(S(1), n);
        acc.set_arity(n);
        for (int i = 0; i <= bound_; ++i) {
            acc += coeff(i) * pw;
            pw *= py;
        }
        return acc;
    }

private:
    RatPoly base_;
    int bound_;
    std::size_t arity_;
    std::vector<MPoly<S>> coeffs_;
};

namespace detail {

// One ring value during p-adic circuit execution: levels 0..D of the
// expansion. Addition is levelwise; multiplication convolves and pushes the
// single carry (deg_Y of a product of reduced coefficients is < 2 deg p - 1,
// so one division with remainder per pair suffices).
template <class S>
struct PadicElem {
    std::vector<MPoly<S>> levels;
};

template <class S>
PadicElem<S> padic_mul(const PadicElem<S>& a, const PadicElem<S>& b,
                       const RatPoly& p, int x_bound) {
    std::size_t levels = a.levels.size();
    PadicElem<S> r;
    r.levels.assign(levels, MPoly<S>());
    for (std::size_t i = 0; i < levels; ++i) {
        if (a.levels[i].is_zero_poly()) continue;
        for (std::size_t j = 0; i + j < levels; ++j) {
            if (b.levels[j].is_zero_poly()) continue;
            MPoly<S> prod = a.levels[i] * b.levels[j];
            if (x_bound >= 0) prod = truncate_bidegree(prod, -1, x_bound);
            auto [q, rem] = divrem_y(prod, p);
            r.levels[i + j] += rem;
            if (i + j + 1 < levels) r.levels[i + j + 1] += q;
        }
    }
    return r;
}

} // namespace detail

template <class S>
PadicTable<S> padic_extract(const Slp& slp, const RatPoly& p, int bound,
                            int x_bound = -1, int output = 0) {
    auto n = static_cast<std::size_t>(slp.arity());
    if (n == 0) throw ArityMismatch("circuit has no Y input");
    auto levels = static_cast<std::size_t>(bound) + 1;
    using Elem = detail::PadicElem<S>;
    auto from_poly = [&](const MPoly<S>& f) {
        Elem e;
        e.levels = padic_of_poly(f, p, bound);
        return e;
    };
    std::vector<Elem> inputs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Elem e;
        e.levels.assign(levels, MPoly<S>());
        e.levels[0] = MPoly<S>::variable(i, n);
        inputs.push_back(std::move(e));
    }
    inputs.push_back(from_poly(MPoly<S>::variable(n - 1, n)));

    std::vector<Elem> vals;
    auto get = [&](const Slp::Ref& r) -> Elem {
        switch (r.kind) {
            case Slp::Ref::Kind::Input: return inputs[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const: {
                Elem e;
                e.levels.assign(levels, MPoly<S>());
                e.levels[0] =
                    MPoly<S>(detail::embed_constant<S>(slp, r.idx), n);
                return e;
            }
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : slp.nodes) {
        Elem a = get(node.a), b = get(node.b), r;
        switch (node.op) {
            case Slp::Op::Add:
            case Slp::Op::Sub:
                r.levels.assign(levels, MPoly<S>());
                for (std::size_t i = 0; i < levels; ++i)
                    r.levels[i] = node.op == Slp::Op::Add
                                      ? a.levels[i] + b.levels[i]
                                      : a.levels[i] - b.levels[i];
                break;
            case Slp::Op::Mul:
                r = detail::padic_mul(a, b, p, x_bound);
                break;
            case Slp::Op::Div:
                throw DivisionByZero("division node in p-adic execution");
        }
        vals.push_back(std::move(r));
    }
    Elem out = get(slp.outputs.at(static_cast<std::size_t>(output)));
    PadicTable<S> table(p, bound, n);
    for (std::size_t i = 0; i < levels; ++i)
        table.set_coeff(static_cast<int>(i), std::move(out.levels[i]));
    return table;
}

struct TrailingResult {
    long q = 0;
    Slp circuit;           // over EpsScalar; specializes to f_q at eps = 0
    MPoly<Rat> trailing;   // f_q itself
};

// Trailing p-adic coefficient of the circuit's output: the order q and a
// circuit computing f_q, built by executing the source circuit in the
// quotient ring modulo (p - eps).
TrailingResult trailing_coefficient(const Slp& slp, const RatPoly& p);

} // namespace slpfactor

#endif
