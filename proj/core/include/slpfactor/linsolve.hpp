#ifndef SLPFACTOR_LINSOLVE_HPP
#define SLPFACTOR_LINSOLVE_HPP

#include <vector>

#include "slpfactor/errors.hpp"
#include "slpfactor/rat.hpp"

namespace slpfactor {

enum class PivotStrategy { FirstNonzero, LastNonzero };

// Unique solution of A x = b over a fraction field (Rat, EpsScalar,
// RatFunc<...>). A may be square or overdetermined-consistent.
// Fraction-free (Bareiss-style) forward elimination: every division below
// is exact when the entries are polynomial-like, which controls
// coefficient blowup over function fields.
template <class F>
std::vector<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b,
                            PivotStrategy pivot = PivotStrategy::FirstNonzero) {
    const std::size_t rows = a.size();
    if (rows == 0) return {};
    const std::size_t cols = a[0].size();
    if (rows < cols) throw Singular("underdetermined system");
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw ArityMismatch("ragged matrix");
        a[i].push_back(b.at(i));  // augmented column
    }

    F prev_piv(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Pivot selection within the remaining rows.
        std::size_t choice = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!is_zero(a[r][col])) {
                choice = r;
                if (pivot == PivotStrategy::FirstNonzero) break;
            }
        }
        if (choice == rows) throw Singular("no pivot in column");
        std::swap(a[rank], a[choice]);
        const F piv = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c <= cols; ++c)
                a[r][c] = (a[r][c] * piv - a[r][col] * a[rank][c]) / prev_piv;
            a[r][col] = F(0);
        }
        prev_piv = piv;
        ++rank;
    }
    // Rows below the rank must have vanished entirely.
    for (std::size_t r = rank; r < rows; ++r)
        if (!is_zero(a[r][cols]))
            throw Inconsistent("residual right-hand side in eliminated row");

    std::vector<F> x(cols, F(0));
    for (std::size_t row = rank; row-- > 0;) {
        std::size_t lead = 0;
        while (lead < cols && is_zero(a[row][lead])) ++lead;
        F acc = a[row][cols];
        for (std::size_t c = lead + 1; c < cols; ++c) acc = acc - a[row][c] * x[c];
        x[lead] = acc / a[row][lead];
    }
    return x;
}

} // namespace slpfactor

#endif
