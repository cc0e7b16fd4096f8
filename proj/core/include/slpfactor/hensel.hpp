#ifndef SLPFACTOR_HENSEL_HPP
#define SLPFACTOR_HENSEL_HPP

#include "slpfactor/padic.hpp"

namespace slpfactor {

// Lifting state: factor parts recovered so far, the Bezout pair for the
// coprime specializations, and the g0-adic coefficient table of f.
struct HenselState {
    int d = 0;
    long e = 1;
    std::size_t arity = 0;
    int s = 0;                  // parts up to X-degree s are fixed
    RatPoly g0, h0, u, v;       // u*h0 + v*g0 = 1, deg u < d
    PadicTable<Rat> f_table;    // base g0, X-truncated at degree d
    std::vector<MPoly<Rat>> g_parts, h_parts;  // X-homogeneous parts
    long order_budget = 0;      // tracked p-adic order, (d - s) * e

    HenselState() : f_table(RatPoly::variable(), 0, 1) {}

    MPoly<Rat> g_partial() const;  // sum of fixed g parts
    MPoly<Rat> h_partial() const;
};

HenselState hensel_init(const Slp& f, const RatPoly& g0, const RatPoly& h0,
                        long e, int d);
void hensel_step(HenselState& state);
MPoly<Rat> hensel_factor(const Slp& f, const RatPoly& g0, const RatPoly& h0,
                         long e, int d);

// Exact e-th root of a perfect power with nonvanishing constant term.
MPoly<Rat> eth_root(const Slp& f, long e, int d);

} // namespace slpfactor

#endif
