#ifndef SLPFACTOR_COSTMODEL_HPP
#define SLPFACTOR_COSTMODEL_HPP

#include <cstdint>

namespace slpfactor {

// Operation counting model. mul_cost is the schoolbook bound for
// multiplying two univariate polynomials of degree d; it is monotone and
// subadditive. Linear solving is priced with exponent 3 (plain Gaussian
// elimination).
struct CostModel {
    static long mul_cost(long d) { return (d + 1) * (d + 1); }
    static constexpr int mat_solve_exponent = 3;
    // Implementation constant for division elimination: the emitted circuit
    // has at most kDivFreeFactor * mul_cost(D) * length(in) nodes.
    static constexpr long kDivFreeFactor = 4;
};

// Thread-local scalar operation tally, bumped by the series/polynomial
// kernels. Used by `bench` to put measured counts next to the bound
// formulas.
struct OpCounters {
    std::int64_t adds = 0;
    std::int64_t muls = 0;
    void reset() { adds = 0; muls = 0; }
};

inline OpCounters& op_counters() {
    thread_local OpCounters counters;
    return counters;
}

inline void count_adds(std::int64_t n) { op_counters().adds += n; }
inline void count_muls(std::int64_t n) { op_counters().muls += n; }

} // namespace slpfactor

#endif
