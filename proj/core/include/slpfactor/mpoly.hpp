#ifndef SLPFACTOR_MPOLY_HPP
#define SLPFACTOR_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "slpfactor/costmodel.hpp"
#include "slpfactor/eps.hpp"
#include "slpfactor/rat.hpp"

namespace slpfactor {

using Expo = std::vector<int>;

inline int expo_total(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lexicographic order: first by total degree, then lex.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int ta = expo_total(a), tb = expo_total(b);
        if (ta != tb) return ta < tb;
        // Compare lexicographically after padding with zeros.
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int ai = i < a.size() ? a[i] : 0;
            int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai < bi;
        }
        return false;
    }
};

// Sparse multivariate polynomial over a scalar ring S (Rat or EpsScalar).
// Terms map exponent vectors to nonzero coefficients; all stored exponent
// vectors have length arity(). The zero polynomial may have any arity;
// mixed-arity operands are padded to the larger arity.
template <class S>
class MPoly {
public:
    using TermMap = std::map<Expo, S, GradedLexLess>;

    MPoly() : arity_(0) {}
    MPoly(long v) : arity_(0) {  // NOLINT: ring-generic constant
        if (v != 0) terms_[Expo{}] = S(v);
    }
    explicit MPoly(S c, std::size_t arity = 0) : arity_(arity) {
        if (!is_zero(c)) terms_[Expo(arity, 0)] = std::move(c);
    }

    static MPoly variable(std::size_t i, std::size_t arity) {
        MPoly p;
        p.arity_ = arity;
        Expo e(arity, 0);
        e.at(i) = 1;
        p.terms_[e] = S(1);
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(Expo e, S c) {
        if (e.size() < arity_) e.resize(arity_, 0);
        if (e.size() > arity_) set_arity(e.size());
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!is_zero(c)) terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    S coeff(const Expo& e) const {
        Expo k = e;
        k.resize(arity_, 0);
        auto it = terms_.find(k);
        return it == terms_.end() ? S(0) : it->second;
    }

    void set_arity(std::size_t n) {
        if (n == arity_) return;
        if (n < arity_) {
            for (auto& [e, c] : terms_)
                for (std::size_t i = n; i < e.size(); ++i)
                    if (e[i] != 0) throw ArityMismatch("cannot shrink arity");
        }
        TermMap fixed;
        for (auto& [e, c] : terms_) {
            Expo k = e;
            k.resize(n, 0);
            fixed.emplace(std::move(k), c);
        }
        terms_ = std::move(fixed);
        arity_ = n;
    }

    int total_degree() const {  // -1 for zero
        if (terms_.empty()) return -1;
        return expo_total(terms_.rbegin()->first);
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (auto& [e, c] : terms_)
            d = std::max(d, var < e.size() ? e[var] : 0);
        return terms_.empty() ? -1 : std::max(d, 0);
    }

    bool is_homogeneous(int deg) const {
        for (auto& [e, c] : terms_)
            if (expo_total(e) != deg) return false;
        return true;
    }

    MPoly homogeneous_part(int deg) const {
        MPoly r;
        r.arity_ = arity_;
        for (auto& [e, c] : terms_)
            if (expo_total(e) == deg) r.terms_.emplace(e, c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        r.set_arity(std::max(a.arity_, b.arity_));
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        count_adds(static_cast<long>(b.terms_.size()));
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        r.set_arity(std::max(a.arity_, b.arity_));
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        count_adds(static_cast<long>(b.terms_.size()));
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        r.arity_ = std::max(a.arity_, b.arity_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e(r.arity_, 0);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
                r.add_term(std::move(e), ca * cb);
            }
        count_muls(static_cast<long>(a.terms_.size() * b.terms_.size()));
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ita = a.terms_.begin();
        auto itb = b.terms_.begin();
        for (; ita != a.terms_.end(); ++ita, ++itb) {
            Expo ea = ita->first, eb = itb->first;
            ea.resize(std::max(ea.size(), eb.size()), 0);
            eb.resize(ea.size(), 0);
            if (ea != eb || !(ita->second == itb->second)) return false;
        }
        return true;
    }

    MPoly scaled(const S& s) const {
        if (is_zero(s)) {
            MPoly z;
            z.arity_ = arity_;
            return z;
        }
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = c * s;
        return r;
    }

    MPoly derivative(std::size_t var) const {
        MPoly r;
        r.arity_ = arity_;
        for (auto& [e, c] : terms_) {
            int k = var < e.size() ? e[var] : 0;
            if (k == 0) continue;
            Expo d = e;
            d[var] = k - 1;
            r.add_term(std::move(d), c * S(k));
        }
        return r;
    }

    // Substitute each variable by a value in a ring R (with embed : S -> R).
    template <class R, class Embed>
    R eval(const std::vector<R>& images, Embed&& embed) const {
        if (images.size() < arity_) throw ArityMismatch("too few images in eval");
        R acc(0);
        for (auto& [e, c] : terms_) {
            R term = embed(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            acc = acc + term;
        }
        return acc;
    }

    template <class R>
    R eval(const std::vector<R>& images) const {
        return eval(images, [](const S& c) { return R(c); });
    }

    S eval_point(const std::vector<S>& point) const {
        return eval(point, [](const S& c) { return c; });
    }

    MPoly substitute(const std::vector<MPoly>& images) const {
        return eval(images, [this](const S& c) { return MPoly(c, arity_); });
    }

    template <class T, class Fn>
    MPoly<T> map_coeffs(Fn&& fn) const {
        MPoly<T> r;
        r.set_arity(arity_);
        for (auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    // Leading term in graded-lex order.
    std::pair<Expo, S> leading_term() const {
        if (terms_.empty()) throw ZeroPolynomial("leading term of zero");
        return *terms_.rbegin();
    }

    std::vector<Expo> support() const {
        std::vector<Expo> s;
        s.reserve(terms_.size());
        for (auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

private:
    std::size_t arity_;
    TermMap terms_;
};

// Exact division over a field scalar; throws InexactDivision when b does
// not divide a.
template <class S>
MPoly<S> exact_divide(const MPoly<S>& a, const MPoly<S>& b) {
    if (b.is_zero_poly()) throw DivisionByZero("mpoly division by zero");
    MPoly<S> rem = a, quo;
    std::size_t arity = std::max(a.arity(), b.arity());
    rem.set_arity(arity);
    quo.set_arity(arity);
    auto [eb, cb] = b.leading_term();
    Expo ebp = eb;
    ebp.resize(arity, 0);
    S cb_inv = inv(cb);
    while (!rem.is_zero_poly()) {
        auto [er, cr] = rem.leading_term();
        Expo q(arity, 0);
        bool ok = true;
        for (std::size_t i = 0; i < arity; ++i) {
            q[i] = (i < er.size() ? er[i] : 0) - ebp[i];
            if (q[i] < 0) ok = false;
        }
        if (!ok) throw InexactDivision("leading term not divisible");
        MPoly<S> t;
        t.set_arity(arity);
        t.add_term(q, cr * cb_inv);
        quo += t;
        rem -= t * b;
    }
    return quo;
}

template <class S>
bool divides(const MPoly<S>& b, const MPoly<S>& a) {
    try {
        (void)exact_divide(a, b);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

template <class S>
MPoly<S> power(const MPoly<S>& p, unsigned long e) {
    MPoly<S> acc(S(1), p.arity()), base = p;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

template <class S>
bool is_zero(const MPoly<S>& p) {
    return p.is_zero_poly();
}

inline MPoly<Rat> specialize(const MPoly<EpsScalar>& p) {
    return p.map_coeffs<Rat>([](const EpsScalar& c) { return c.at_zero(); });
}

inline MPoly<EpsScalar> to_eps(const MPoly<Rat>& p) {
    return p.map_coeffs<EpsScalar>([](const Rat& c) { return EpsScalar(c); });
}

std::string to_string(const MPoly<Rat>& p, const std::vector<std::string>& names);
std::string to_string(const MPoly<EpsScalar>& p,
                      const std::vector<std::string>& names);
// Sparse polynomial syntax, e.g. `3/2*X1^2*X2 + -1*X2^3`.
MPoly<Rat> parse_mpoly(const std::string& text,
                       const std::vector<std::string>& names);

std::vector<std::string> default_var_names(std::size_t n_x, bool with_y);

} // namespace slpfactor

#endif
