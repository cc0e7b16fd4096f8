#ifndef SLPFACTOR_APPROX_HPP
#define SLPFACTOR_APPROX_HPP

#include "slpfactor/slp.hpp"

namespace slpfactor {

// A circuit whose eps = 0 specialization is the target polynomial; when an
// order q is present, the expansion is eps^q * target + eps^(q+1) * (rest
// with pole-free coefficients).
struct ApproxWitness {
    Slp circuit;
    MPoly<Rat> target;
    std::optional<long> order;
};

struct WitnessReport {
    int length = 0;
    std::optional<long> order;
};

// Validates the witness semantics exactly; the returned length is an upper
// bound for the approximative complexity of the target.
WitnessReport verify_witness(const ApproxWitness& w);

// Reads off the minimal q with expand(F) in eps^q * (nonzero at eps = 0),
// and that specialization.
std::pair<long, MPoly<Rat>> infer_order(const Slp& f, int output = 0);

struct LaurentResult {
    Slp slp;  // constants pole-free; computes eps^q * (original value)
    long q = 0;
};

// Laurent-to-power simulation: tracks every wire as eps^(-alpha) * A with A
// pole-free, at most doubling the length.
LaurentResult laurent_to_power(const Slp& f);

struct NewtonFace {
    std::vector<long> w;
    long c = 0;
    std::vector<Expo> support;  // exponents of f on the face
};

// Witness for the initial form of f on the given polytope face:
// eps^(-c) * f(eps^w1 X1, ..., eps^wn Xn).
ApproxWitness initial_term_degeneration(const Slp& f, const NewtonFace& face);

// Supporting data (w, c) for the faces of the Newton polytope of f
// (facets when the polytope is full-dimensional); exact, n <= 3.
std::vector<NewtonFace> newton_polytope_faces(const MPoly<Rat>& f);

// Oracle-style initial form: terms minimizing <w, a>.
MPoly<Rat> initial_form(const MPoly<Rat>& f, const std::vector<long>& w);

} // namespace slpfactor

#endif
