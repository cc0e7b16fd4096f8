#ifndef SLPFACTOR_SERIES_HPP
#define SLPFACTOR_SERIES_HPP

#include <sstream>

#include "slpfactor/slp.hpp"

namespace slpfactor {

// Multivariate power series truncated at total degree D, stored as the list
// of homogeneous parts. The scalar constructor produces an "unbounded"
// element (bound -1) that adapts to the other operand, so the type works as
// a ring value in generic code.
template <class S>
class TruncSeries {
public:
    TruncSeries() : bound_(-1), arity_(0) {}
    TruncSeries(long v) : bound_(-1), arity_(0) {  // NOLINT: ring constant
        parts_.push_back(MPoly<S>(v));
    }
    TruncSeries(int bound, std::size_t arity) : bound_(bound), arity_(arity) {
        parts_.assign(static_cast<std::size_t>(bound) + 1, MPoly<S>());
    }

    static TruncSeries from_poly(const MPoly<S>& p, int bound) {
        TruncSeries s(bound, p.arity());
        for (auto& [e, c] : p.terms())
            if (expo_total(e) <= bound) s.parts_[static_cast<std::size_t>(expo_total(e))].add_term(e, c);
        return s;
    }

    int bound() const { return bound_; }
    std::size_t arity() const { return arity_; }

    const MPoly<S>& part(int deg) const {
        static const MPoly<S> kZero;
        if (deg < 0) return kZero;
        auto i = static_cast<std::size_t>(deg);
        return i < parts_.size() ? parts_[i] : kZero;
    }
    void set_part(int deg, MPoly<S> p) {
        require_bounded();
        parts_.at(static_cast<std::size_t>(deg)) = std::move(p);
    }

    MPoly<S> to_poly() const {
        MPoly<S> acc;
        acc.set_arity(arity_);
        for (const auto& p : parts_) acc += p;
        return acc;
    }

    bool is_zero_series() const {
        for (const auto& p : parts_)
            if (!p.is_zero_poly()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < y.parts_.size(); ++i) x.parts_[i] += y.parts_[i];
        return x;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < y.parts_.size(); ++i) x.parts_[i] -= y.parts_[i];
        return x;
    }
    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& p : r.parts_) p = -p;
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = align(a, b);
        TruncSeries r = x;
        for (auto& p : r.parts_) p = MPoly<S>();
        r.set_arity_all(std::max(x.arity_, y.arity_));
        for (std::size_t i = 0; i < x.parts_.size(); ++i) {
            if (x.parts_[i].is_zero_poly()) continue;
            for (std::size_t j = 0; i + j < y.parts_.size(); ++j)
                r.parts_[i + j] += x.parts_[i] * y.parts_[j];
        }
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = align(a, b);
        return x.parts_ == y.parts_;
    }

    TruncSeries scaled(const S& s) const {
        TruncSeries r = *this;
        for (auto& p : r.parts_) p = p.scaled(s);
        return r;
    }

    // Matches bounds/arity of the two operands; an unbounded value inherits
    // the bound of the other side.
    static std::pair<TruncSeries, TruncSeries> align(TruncSeries a, TruncSeries b) {
        if (a.bound_ < 0 && b.bound_ >= 0) a.rebound(b.bound_);
        if (b.bound_ < 0 && a.bound_ >= 0) b.rebound(a.bound_);
        if (a.bound_ != b.bound_)
            throw ArityMismatch("mismatched truncation bounds");
        std::size_t n = std::max(a.arity_, b.arity_);
        a.set_arity_all(n);
        b.set_arity_all(n);
        return {std::move(a), std::move(b)};
    }

private:
    void require_bounded() const {
        if (bound_ < 0) throw ArityMismatch("unbounded series");
    }
    void rebound(int bound) {
        bound_ = bound;
        parts_.resize(static_cast<std::size_t>(bound) + 1, MPoly<S>());
    }
    void set_arity_all(std::size_t n) {
        arity_ = n;
        for (auto& p : parts_) p.set_arity(n);
    }
    int bound_;
    std::size_t arity_;
    std::vector<MPoly<S>> parts_;
};

template <class S>
bool is_zero(const TruncSeries<S>& s) {
    return s.is_zero_series();
}

template <class S>
TruncSeries<S> series_mul(const TruncSeries<S>& a, const TruncSeries<S>& b) {
    return a * b;
}

// Quotient a/b for b with invertible (nonzero constant) part.
template <class S>
TruncSeries<S> series_div(const TruncSeries<S>& a, const TruncSeries<S>& b) {
    auto [x, y] = TruncSeries<S>::align(a, b);
    const MPoly<S>& b0 = y.part(0);
    if (b0.is_zero_poly())
        throw NotAUnit("series division by non-unit");
    S c0 = b0.leading_term().second;
    S c0i = inv(c0);
    TruncSeries<S> q = x;
    for (int d = 0; d <= q.bound(); ++d) {
        MPoly<S> acc = x.part(d);
        for (int k = 1; k <= d; ++k) acc -= y.part(k) * q.part(d - k);
        q.set_part(d, acc.scaled(c0i));
    }
    return q;
}

template <class S>
TruncSeries<S> ring_div(const TruncSeries<S>& a, const TruncSeries<S>& b) {
    return series_div(a, b);
}

// Horner evaluation of sum_i F_i * Phi^i, truncated.
template <class S>
TruncSeries<S> series_poly_compose(const std::vector<TruncSeries<S>>& f,
                                   const TruncSeries<S>& phi) {
    if (f.empty()) throw ArityMismatch("empty coefficient list");
    TruncSeries<S> acc = f.back();
    for (std::size_t i = f.size() - 1; i-- > 0;) acc = acc * phi + f[i];
    return acc;
}

// --- bihomogeneous tables -------------------------------------------------

// Entries F_i^(delta): the coefficient of Y^i, split into X-homogeneous
// parts of degree delta. Caps on the two degrees may differ.
template <class S>
class BiHomTable {
public:
    BiHomTable() : dy_(0), dx_(0) {}
    BiHomTable(int dy, int dx, std::size_t n_x) : dy_(dy), dx_(dx), n_x_(n_x) {
        entries_.assign(static_cast<std::size_t>(dy) + 1,
                        std::vector<MPoly<S>>(static_cast<std::size_t>(dx) + 1));
    }

    int y_bound() const { return dy_; }
    int x_bound() const { return dx_; }
    std::size_t n_x() const { return n_x_; }

    const MPoly<S>& entry(int i, int delta) const {
        static const MPoly<S> kZero;
        if (i < 0 || i > dy_ || delta < 0 || delta > dx_) return kZero;
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(delta)];
    }
    void set_entry(int i, int delta, MPoly<S> p) {
        entries_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(delta)) =
            std::move(p);
    }

    // Coefficient of Y^i as a polynomial in X, truncated at x_bound.
    MPoly<S> y_coefficient(int i) const {
        MPoly<S> acc;
        acc.set_arity(n_x_);
        for (int d = 0; d <= dx_; ++d) acc += entry(i, d);
        return acc;
    }

    // Sum of entries times Y^i; arity n_x + 1 with Y last.
    MPoly<S> reassemble() const {
        MPoly<S> acc;
        acc.set_arity(n_x_ + 1);
        for (int i = 0; i <= dy_; ++i)
            for (int d = 0; d <= dx_; ++d)
                for (auto& [e, c] : entry(i, d).terms()) {
                    Expo k = e;
                    k.resize(n_x_ + 1, 0);
                    k[n_x_] = i;
                    acc.add_term(std::move(k), c);
                }
        return acc;
    }

private:
    int dy_, dx_;
    std::size_t n_x_ = 0;
    std::vector<std::vector<MPoly<S>>> entries_;
};

namespace detail {

// Drops terms whose X-total degree exceeds dx or whose Y-degree (last
// variable) exceeds dy. A cap of -1 disables that side.
template <class S>
MPoly<S> truncate_bidegree(const MPoly<S>& p, int dy, int dx) {
    MPoly<S> r;
    r.set_arity(p.arity());
    for (auto& [e, c] : p.terms()) {
        int y = e.empty() ? 0 : e.back();
        int x = expo_total(e) - y;
        if (dy >= 0 && y > dy) continue;
        if (dx >= 0 && x > dx) continue;
        r.add_term(e, c);
    }
    return r;
}

template <class S>
S embed_constant(const Slp& slp, int idx) {
    if constexpr (std::is_same_v<S, Rat>) {
        return slp.constant_as_rat(idx);
    } else {
        return slp.constants[static_cast<std::size_t>(idx)];
    }
}

// Circuit execution over the bidegree-truncated polynomial ring.
template <class S>
MPoly<S> eval_bitruncated(const Slp& slp, int dy, int dx, int output) {
    auto n = static_cast<std::size_t>(slp.arity());
    std::vector<MPoly<S>> inputs;
    for (std::size_t i = 0; i < n; ++i)
        inputs.push_back(MPoly<S>::variable(i, n));
    std::vector<MPoly<S>> vals;
    auto get = [&](const Slp::Ref& r) -> MPoly<S> {
        switch (r.kind) {
            case Slp::Ref::Kind::Input: return inputs[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const:
                return MPoly<S>(embed_constant<S>(slp, r.idx), n);
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : slp.nodes) {
        MPoly<S> a = get(node.a), b = get(node.b);
        switch (node.op) {
            case Slp::Op::Add: vals.push_back(a + b); break;
            case Slp::Op::Sub: vals.push_back(a - b); break;
            case Slp::Op::Mul:
                vals.push_back(truncate_bidegree(a * b, dy, dx));
                break;
            case Slp::Op::Div:
                throw DivisionByZero("division node in truncated execution");
        }
    }
    return get(slp.outputs.at(static_cast<std::size_t>(output)));
}

} // namespace detail

template <class S>
BiHomTable<S> bihom_extract(const Slp& slp, int dy, int dx, int output = 0) {
    auto n = static_cast<std::size_t>(slp.arity());
    if (n == 0) throw ArityMismatch("circuit has no Y input");
    MPoly<S> val = detail::eval_bitruncated<S>(slp, dy, dx, output);
    BiHomTable<S> table(dy, dx, n - 1);
    for (auto& [e, c] : val.terms()) {
        int i = e.empty() ? 0 : e.back();
        Expo xe(e.begin(), e.end());
        if (!xe.empty()) xe.pop_back();
        int delta = expo_total(xe);
        MPoly<S> part = table.entry(i, delta);
        part.set_arity(n - 1);
        xe.resize(n - 1, 0);
        part.add_term(std::move(xe), c);
        table.set_entry(i, delta, std::move(part));
    }
    return table;
}

template <class S>
BiHomTable<S> bihom_extract(const Slp& slp, int d) {
    return bihom_extract<S>(slp, d, d);
}

std::string serialize_bihom(const BiHomTable<Rat>& t,
                            const std::vector<std::string>& x_names);

} // namespace slpfactor

#endif
