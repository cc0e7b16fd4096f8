#ifndef SLPFACTOR_RATFUNC_HPP
#define SLPFACTOR_RATFUNC_HPP

#include "slpfactor/mpoly.hpp"

namespace slpfactor {

// Fraction of sparse polynomials. Not gcd-reduced (multivariate gcds are
// avoided); equality is decided by cross-multiplication, and exact
// polynomial division is attempted opportunistically to keep values
// polynomial when they are.
template <class S>
class RatFunc {
public:
    RatFunc() : num_(), den_(S(1)) {}
    RatFunc(long v) : num_(v), den_(S(1)) {}  // NOLINT: ring constant
    explicit RatFunc(MPoly<S> num) : num_(std::move(num)), den_(S(1)) {}
    RatFunc(MPoly<S> num, MPoly<S> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero_poly()) throw DivisionByZero("rational function with zero denominator");
        simplify();
    }

    const MPoly<S>& num() const { return num_; }
    const MPoly<S>& den() const { return den_; }
    bool is_zero_val() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.total_degree() == 0; }

    MPoly<S> as_polynomial() const {
        if (den_.total_degree() == 0)
            return num_.scaled(inv(den_.leading_term().second));
        return exact_divide(num_, den_);  // throws InexactDivision
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero_val()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    void simplify() {
        if (num_.is_zero_poly()) {
            den_ = MPoly<S>(S(1));
            return;
        }
        if (den_.total_degree() > 0) {
            try {
                num_ = exact_divide(num_, den_);
                den_ = MPoly<S>(S(1));
            } catch (const InexactDivision&) {
            }
        }
    }
    MPoly<S> num_, den_;
};

template <class S>
bool is_zero(const RatFunc<S>& f) {
    return f.is_zero_val();
}

template <class S>
RatFunc<S> inv(const RatFunc<S>& f) {
    if (f.is_zero_val()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc<S>(f.den(), f.num());
}

// eps -> 0 on a fraction over EpsScalar coefficients; requires the
// denominator to stay nonzero under specialization.
inline RatFunc<Rat> specialize(const RatFunc<EpsScalar>& f) {
    MPoly<Rat> den0 = specialize(f.den());
    if (den0.is_zero_poly())
        throw NotDefinedAtZero("denominator vanishes at eps=0");
    return RatFunc<Rat>(specialize(f.num()), std::move(den0));
}

} // namespace slpfactor

#endif
