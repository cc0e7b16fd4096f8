#ifndef SLPFACTOR_DIVFREE_HPP
#define SLPFACTOR_DIVFREE_HPP

#include "slpfactor/slp.hpp"

namespace slpfactor {

struct DivFreeResult {
    // Division-free circuit with D+1 outputs: the homogeneous parts of
    // degree 0..D of the source output, in coordinates shifted by `shift`
    // (the circuit's inputs stand for X - xi).
    Slp slp;
    std::vector<Rat> shift;
};

DivFreeResult eliminate_divisions(const Slp& slp, const std::vector<Rat>& xi,
                                  int bound, int output = 0);

} // namespace slpfactor

#endif
