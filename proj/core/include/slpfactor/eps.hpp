#ifndef SLPFACTOR_EPS_HPP
#define SLPFACTOR_EPS_HPP

#include <string>

#include "slpfactor/unipoly.hpp"

namespace slpfactor {

// Element of K = k(eps), kept fully reduced: gcd(num, den) = 1 and den
// monic. The subring R of elements defined at eps = 0 is exactly
// {x : x.den(0) != 0}, so definedness is a syntactic check.
class EpsScalar {
public:
    EpsScalar() : num_(), den_(RatPoly::constant(Rat(1))) {}
    EpsScalar(long v)  // NOLINT: implicit by design, mirrors Rat
        : num_(RatPoly::constant(rat(v))), den_(RatPoly::constant(Rat(1))) {}
    explicit EpsScalar(const Rat& v)
        : num_(RatPoly::constant(v)), den_(RatPoly::constant(Rat(1))) {}
    EpsScalar(RatPoly num, RatPoly den);

    static EpsScalar eps(std::size_t power = 1) {
        return EpsScalar(RatPoly::monomial(Rat(1), power),
                         RatPoly::constant(Rat(1)));
    }
    // eps^-power
    static EpsScalar eps_inv(std::size_t power) {
        return EpsScalar(RatPoly::constant(Rat(1)),
                         RatPoly::monomial(Rat(1), power));
    }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }

    bool is_zero_val() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // True iff the element lies in R (defined at eps = 0).
    bool defined_at_zero() const { return !is_zero(den_.coeff(0)); }

    // eps -> 0. Throws NotDefinedAtZero when the element is in K \ R.
    Rat at_zero() const;

    // Valuation at eps = 0: ord(num) - ord(den); 0 for the zero element.
    long order() const;

    // Substitute eps -> eps^n.
    EpsScalar compose_power(std::size_t n) const {
        return EpsScalar(num_.compose_power(n), den_.compose_power(n));
    }

    friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b);
    friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b);
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
    friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b);
    EpsScalar operator-() const;
    EpsScalar& operator+=(const EpsScalar& o) { return *this = *this + o; }
    EpsScalar& operator-=(const EpsScalar& o) { return *this = *this - o; }
    EpsScalar& operator*=(const EpsScalar& o) { return *this = *this * o; }
    EpsScalar& operator/=(const EpsScalar& o) { return *this = *this / o; }

    friend bool operator==(const EpsScalar& a, const EpsScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatPoly num_, den_;
    void reduce();
};

inline bool is_zero(const EpsScalar& x) { return x.is_zero_val(); }
inline bool is_one(const EpsScalar& x) { return x == EpsScalar(1); }
EpsScalar inv(const EpsScalar& x);

inline Rat eps_specialize(const EpsScalar& x) { return x.at_zero(); }

std::string to_string(const EpsScalar& x);
// Scalar literal syntax: `p/q` (plain rational) or
// `(poly in eps)/(poly in eps)`, e.g. `(1+eps)/(2)`, `(eps^2+eps)/(eps)`.
// A parenthesized numerator alone, `(1+eps)`, is also accepted.
EpsScalar parse_eps_scalar(const std::string& text);

} // namespace slpfactor

#endif
