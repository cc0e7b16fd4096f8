#ifndef SLPFACTOR_MINPOLY_HPP
#define SLPFACTOR_MINPOLY_HPP

#include "slpfactor/linsolve.hpp"
#include "slpfactor/newton.hpp"

namespace slpfactor {

// The linear system determining the minimal polynomial of an algebraic
// series: coefficients of T^t, t <= 2d^2, of sum_{i,a<=d} Z_{i,a} T^a psi^i
// with psi = sum_d phi^(d) T^d, pinned by Z_{d,0} = 1 and Z_{d,a} = 0 for
// 0 < a <= d. The T-grading matches X-homogeneity, so each unknown Z_{i,a}
// is X-homogeneous of degree a.
struct MinPolySystem {
    int d = 0;
    int precision = 0;  // highest T-power used, = 2d^2
    std::size_t n_x = 0;
    // psi_pow[i][m]: X-homogeneous degree-m part of psi^i, m <= precision.
    std::vector<std::vector<MPoly<Rat>>> psi_pow;
    TruncSeries<Rat> phi;  // kept for the substitute-back verification
};

MinPolySystem build_system(const TruncSeries<Rat>& phi, int d);

// Unique solution, reassembled as the monic-in-Y factor; solved after
// splitting into scalar equations per X-monomial. Verifies the result by
// substituting phi back and checking degrees.
MPoly<Rat> solve_minpoly(const MinPolySystem& sys,
                         PivotStrategy pivot = PivotStrategy::FirstNonzero);

enum class LiftMode { Exact, Approx };

// End-to-end factor recovery: normalize at the point, lift the implicit
// function to order 2d^2, reconstruct its minimal polynomial, undo the
// coordinate change, monicize.
MPoly<Rat> reconstruct_factor(const Slp& f, int d, long e,
                              const std::vector<Rat>& point,
                              const std::vector<Rat>& u, const Rat& v,
                              LiftMode mode = LiftMode::Approx);

// Convenience wrapper around an already-normalized instance.
MPoly<Rat> reconstruct_factor(const NormalizedInstance& inst,
                              LiftMode mode = LiftMode::Approx);

} // namespace slpfactor

#endif
