#ifndef SLPFACTOR_RAT_HPP
#define SLPFACTOR_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "slpfactor/errors.hpp"

namespace slpfactor {

// Exact rational scalars. mpq_class keeps values canonical (reduced,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline Rat inv(const Rat& x) {
    if (is_zero(x)) throw DivisionByZero("1/0 over the rationals");
    return Rat(1) / x;
}

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& x);

// Accepts `p`, `-p`, `p/q`.
Rat parse_rat(const std::string& text);

// Exact e-th root of a rational, if it exists.
std::optional<Rat> rat_root(const Rat& x, unsigned long e);

Rat rat_pow(const Rat& x, long e);

} // namespace slpfactor

#endif
