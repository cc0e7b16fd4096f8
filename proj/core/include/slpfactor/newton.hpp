#ifndef SLPFACTOR_NEWTON_HPP
#define SLPFACTOR_NEWTON_HPP

#include "slpfactor/series.hpp"

namespace slpfactor {

struct SmoothPoint {
    std::vector<Rat> point;    // (xi, eta), Y last
    Rat g_value;               // = 0
    Rat h_value;               // != 0
    std::vector<Rat> gradient; // grad g at the point, != 0
};

// Rational point on {g = 0} with h and grad g nonvanishing, found by
// enumerating X-parts of bounded height and extracting rational Y-roots.
SmoothPoint find_smooth_point(const MPoly<Rat>& g, const MPoly<Rat>& h,
                              long search_box);

// All rational roots of a nonzero rational-coefficient polynomial.
std::vector<Rat> rational_roots(const RatPoly& p);

// Height-ordered enumeration of rational tuples: integers first (spiral by
// max-norm, then lexicographic), then denominators up to the box.
std::vector<std::vector<Rat>> rational_grid(std::size_t dim, long box);

struct NormalizedInstance {
    Slp slp;  // f after the coordinate change; conditions (g(0,0)=0 etc.)
              // hold for the transformed factor
    int d = 0;
    long e = 1;
    TransformRecord transform;
};

// Blind mode: the caller supplies the smooth point and the mixing data and
// vouches for the normalization conditions.
NormalizedInstance normalize_instance(const Slp& f, int d, long e,
                                      const std::vector<Rat>& point,
                                      const std::vector<Rat>& u, const Rat& v);

// Test mode: derives point and mixing data from the known factorization and
// verifies every condition exactly.
NormalizedInstance normalize_with_witness(const Slp& f, const MPoly<Rat>& g,
                                          const MPoly<Rat>& h, long e,
                                          long search_box = 8);

// Unique series phi with g(X, phi(X)) = 0 and phi(0) = 0, as homogeneous
// parts up to degree D. g is a polynomial in the X-variables and Y (last).
TruncSeries<Rat> newton_implicit(const MPoly<Rat>& g, int bound);

// Perturbed variant run on F = perturb(f); parts are over k(eps).
TruncSeries<EpsScalar> newton_perturbed(const Slp& f, int bound);

// eps -> 0 on every part; reports the offending part and monomial on
// failure.
TruncSeries<Rat> specialize_parts(const TruncSeries<EpsScalar>& phi);

} // namespace slpfactor

#endif
