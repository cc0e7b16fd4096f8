#include "slpfactor/padic.hpp"

namespace slpfactor {

TrailingResult trailing_coefficient(const Slp& slp, const RatPoly& p) {
    if (slp.has_eps_constants())
        throw ArityMismatch("trailing_coefficient expects exact constants");
    long d = p.degree();
    if (d < 1 || !is_one(p.coeff(d)))
        throw ArityMismatch("base must be monic of degree >= 1");
    auto n = static_cast<std::size_t>(slp.arity());
    if (n == 0) throw ArityMismatch("circuit has no Y input");

    // The order q comes from the explicit p-adic expansion of the output.
    MPoly<Rat> f = expand_rat(slp);
    if (f.is_zero_poly()) throw ZeroPolynomial("output polynomial is zero");
    int ybudget = f.degree_in(n - 1);
    int levels = ybudget / static_cast<int>(d) + 1;
    auto parts = padic_of_poly(f, p, levels);
    long q = -1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!parts[i].is_zero_poly()) { q = static_cast<long>(i); break; }
    // f nonzero implies some coefficient is nonzero.
    MPoly<Rat> fq = parts[static_cast<std::size_t>(q)];

    // Execute the circuit in k(eps)[X][Y] / (p - eps): values are wire
    // vectors of length d holding the Y^0..Y^(d-1) coefficients.
    using Ref = SlpBuilder::Ref;
    auto du = static_cast<std::size_t>(d);
    SlpBuilder b(slp.input_names, slp.rational_mode);
    Ref zero = b.constant(Rat(0));
    using Elem = std::vector<Ref>;
    auto make_elem = [&]() { return Elem(du, zero); };

    std::vector<Elem> inputs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Elem e = make_elem();
        e[0] = b.input(static_cast<int>(i));
        inputs.push_back(std::move(e));
    }
    {
        // The class of Y: when d = 1 we have Y = p - p_0 = eps - p_0.
        Elem e = make_elem();
        if (d == 1)
            e[0] = b.constant(EpsScalar::eps() - EpsScalar(p.coeff(0)));
        else
            e[1] = b.constant(Rat(1));
        inputs.push_back(std::move(e));
    }

    // Reduction data: Y^d = eps - sum_{j<d} p_j Y^j in the quotient.
    std::vector<EpsScalar> red(du);
    EpsScalar epsc = EpsScalar::eps();
    for (std::size_t j = 0; j < du; ++j) red[j] = EpsScalar(-p.coeff(static_cast<long>(j)));

    auto reduce = [&](std::vector<Ref> wide) {
        // wide has length up to 2d-1; fold the top down.
        for (std::size_t t = wide.size(); t-- > du;) {
            Ref w = wide[t];
            wide[t] = zero;
            std::size_t base = t - du;
            wide[base] = b.add(wide[base], b.mul(w, b.constant(epsc)));
            for (std::size_t j = 0; j < du; ++j)
                wide[base + j] = b.add(wide[base + j], b.mul(w, b.constant(red[j])));
        }
        wide.resize(du, zero);
        return wide;
    };

    std::vector<Elem> vals;
    auto get = [&](const Slp::Ref& r) -> Elem {
        switch (r.kind) {
            case Slp::Ref::Kind::Input: return inputs[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const: {
                Elem e = make_elem();
                e[0] = b.constant(slp.constants[static_cast<std::size_t>(r.idx)]);
                return e;
            }
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : slp.nodes) {
        Elem x = get(node.a), y = get(node.b), r;
        switch (node.op) {
            case Slp::Op::Add:
            case Slp::Op::Sub: {
                r = make_elem();
                for (std::size_t i = 0; i < du; ++i)
                    r[i] = node.op == Slp::Op::Add ? b.add(x[i], y[i])
                                                   : b.sub(x[i], y[i]);
                break;
            }
            case Slp::Op::Mul: {
                std::vector<Ref> wide(2 * du - 1, zero);
                for (std::size_t i = 0; i < du; ++i)
                    for (std::size_t j = 0; j < du; ++j)
                        wide[i + j] = b.add(wide[i + j], b.mul(x[i], y[j]));
                r = reduce(std::move(wide));
                break;
            }
            case Slp::Op::Div:
                throw DivisionByZero("division node in quotient-ring execution");
        }
        vals.push_back(std::move(r));
    }
    Elem out = get(slp.outputs.at(0));

    // The class of f is sum_i f_i eps^i; divide by eps^q and rebuild the
    // Y-dependence from the coefficient wires.
    Ref scale = b.constant(EpsScalar::eps_inv(static_cast<std::size_t>(q)));
    Ref y = b.input(static_cast<int>(n) - 1);
    Ref acc = zero;
    for (std::size_t j = 0; j < du; ++j)
        acc = b.add(acc, b.mul(b.mul(out[j], scale), b.pow(y, j)));
    b.set_outputs({acc});

    return TrailingResult{q, std::move(b).take(), std::move(fq)};
}

} // namespace slpfactor
