#ifndef SLPFACTOR_UNIPOLY_HPP
#define SLPFACTOR_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "slpfactor/costmodel.hpp"
#include "slpfactor/errors.hpp"
#include "slpfactor/rat.hpp"

namespace slpfactor {

// Dense univariate polynomial over a commutative ring S.
// coeffs[i] is the coefficient of X^i; the top coefficient is nonzero
// unless the polynomial is zero (empty vector).
template <class S>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long v) {  // NOLINT: ring-generic constant
        if (v != 0) c_.push_back(S(v));
    }
    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(S v) {
        UniPoly p;
        if (!is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    static UniPoly variable() {
        UniPoly p;
        p.c_ = {S(0), S(1)};
        return p;
    }
    // c * X^k
    static UniPoly monomial(S c, std::size_t k) {
        UniPoly p;
        if (!is_zero(c)) {
            p.c_.assign(k + 1, S(0));
            p.c_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
    const S& leading() const { return c_.back(); }

    bool is_monic() const { return !c_.empty() && is_one_scalar(c_.back()); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        count_adds(static_cast<long>(std::min(a.c_.size(), b.c_.size())));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        count_adds(static_cast<long>(std::min(a.c_.size(), b.c_.size())));
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<S> r = c_;
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        count_muls(static_cast<long>(a.c_.size() * b.c_.size()));
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c_ == b.c_;
    }

    UniPoly scaled(const S& s) const {
        if (is_zero(s)) return UniPoly();
        std::vector<S> r = c_;
        for (auto& x : r) x = x * s;
        return UniPoly(std::move(r));
    }

    // Multiply by X^k.
    UniPoly shifted(std::size_t k) const {
        if (c_.empty()) return UniPoly();
        std::vector<S> r(c_.size() + k, S(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<S> r(c_.size() - 1, S(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * S(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    template <class R>
    R eval(const R& x) const {
        R acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
        return acc;
    }

    S eval_scalar(const S& x) const {
        S acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Substitute X -> X^n.
    UniPoly compose_power(std::size_t n) const {
        if (c_.empty()) return UniPoly();
        std::vector<S> r(n * (c_.size() - 1) + 1, S(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * n] = c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned long e) const {
        UniPoly acc = constant(S(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    // Division with remainder; requires an invertible leading coefficient
    // of b (always the case for monic b, or over a field).
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a,
                                              const UniPoly& b) {
        if (b.is_zero_poly()) throw DivisionByZero("unipoly divrem by zero");
        S lead_inv = inv(b.leading());
        std::vector<S> rem = a.c_;
        long db = b.degree();
        if (a.degree() < db) return {UniPoly(), a};
        std::vector<S> quo(a.c_.size() - b.c_.size() + 1, S(0));
        for (long i = a.degree(); i >= db; --i) {
            S& top = rem[static_cast<std::size_t>(i)];
            if (is_zero(top)) continue;
            S q = top * lead_inv;
            quo[static_cast<std::size_t>(i - db)] = q;
            for (long j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -=
                    q * b.c_[static_cast<std::size_t>(j)];
        }
        count_muls((a.degree() - db + 1) * (db + 1));
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

private:
    static bool is_one_scalar(const S& s) { return s == S(1); }
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

template <class S>
bool is_zero(const UniPoly<S>& p) {
    return p.is_zero_poly();
}

// Monic gcd over a field, by the Euclidean algorithm with monic remainders
// (keeps rational coefficient growth manageable at our sizes).
template <class S>
UniPoly<S> unipoly_gcd(UniPoly<S> a, UniPoly<S> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero_poly() ? r : r.scaled(inv(r.leading()));
    }
    if (!a.is_zero_poly()) a = a.scaled(inv(a.leading()));
    return a;
}

// Extended Euclid over a field: returns (g, u, v) with u*a + v*b = g,
// g monic (or zero).
template <class S>
std::tuple<UniPoly<S>, UniPoly<S>, UniPoly<S>> unipoly_xgcd(
    const UniPoly<S>& a, const UniPoly<S>& b) {
    UniPoly<S> r0 = a, r1 = b;
    UniPoly<S> u0 = UniPoly<S>::constant(S(1)), u1;
    UniPoly<S> v0, v1 = UniPoly<S>::constant(S(1));
    while (!r1.is_zero_poly()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<S> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero_poly()) {
        S s = inv(r0.leading());
        r0 = r0.scaled(s);
        u0 = u0.scaled(s);
        v0 = v0.scaled(s);
    }
    return {r0, u0, v0};
}

using RatPoly = UniPoly<Rat>;

std::string to_string(const RatPoly& p, const std::string& var);
RatPoly parse_unipoly(const std::string& text, const std::string& var);

} // namespace slpfactor

#endif
