#include "slpfactor/divfree.hpp"

namespace slpfactor {

// Strassen's trick: run the circuit on truncated power series around xi
// whose coefficients are wires of a fresh division-free circuit. Constant
// terms of all intermediate series are scalars (the values at xi), so every
// division turns into a series inversion against a nonzero constant.
DivFreeResult eliminate_divisions(const Slp& slp, const std::vector<Rat>& xi,
                                  int bound, int output) {
    auto n = static_cast<std::size_t>(slp.arity());
    if (xi.size() != n) throw ArityMismatch("point arity mismatch");
    if (bound < 0) throw ArityMismatch("negative truncation bound");
    auto parts = static_cast<std::size_t>(bound) + 1;

    using Ref = SlpBuilder::Ref;
    SlpBuilder b(slp.input_names);
    Ref zero = b.constant(Rat(0));
    using Elem = std::vector<Ref>;  // homogeneous-part wires 0..bound

    std::vector<Elem> inputs;
    for (std::size_t i = 0; i < n; ++i) {
        Elem e(parts, zero);
        e[0] = b.constant(xi[i]);
        if (parts > 1) e[1] = b.input(static_cast<int>(i));
        inputs.push_back(std::move(e));
    }
    std::vector<Elem> vals;
    auto get = [&](const Slp::Ref& r) -> Elem {
        switch (r.kind) {
            case Slp::Ref::Kind::Input: return inputs[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const: {
                Elem e(parts, zero);
                e[0] = b.constant(slp.constants[static_cast<std::size_t>(r.idx)]);
                return e;
            }
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : slp.nodes) {
        Elem x = get(node.a), y = get(node.b), r(parts, zero);
        switch (node.op) {
            case Slp::Op::Add:
            case Slp::Op::Sub:
                for (std::size_t i = 0; i < parts; ++i)
                    r[i] = node.op == Slp::Op::Add ? b.add(x[i], y[i])
                                                   : b.sub(x[i], y[i]);
                break;
            case Slp::Op::Mul:
                for (std::size_t i = 0; i < parts; ++i)
                    for (std::size_t j = 0; i + j < parts; ++j)
                        r[i + j] = b.add(r[i + j], b.mul(x[i], y[j]));
                break;
            case Slp::Op::Div: {
                // Constant terms stay constant refs by construction, so the
                // value of the divisor at xi is directly inspectable.
                if (!b.is_const(y[0]) || is_zero(b.const_value(y[0])))
                    throw DivisorVanishesAtPoint("divisor vanishes at the chosen point");
                Ref b0inv = b.constant(inv(b.const_value(y[0])));
                for (std::size_t d = 0; d < parts; ++d) {
                    Ref acc = x[d];
                    for (std::size_t k = 1; k <= d; ++k)
                        acc = b.sub(acc, b.mul(y[k], r[d - k]));
                    r[d] = b.mul(acc, b0inv);
                }
                break;
            }
        }
        vals.push_back(std::move(r));
    }
    Elem out = get(slp.outputs.at(static_cast<std::size_t>(output)));
    b.set_outputs(out);
    return DivFreeResult{std::move(b).take(), xi};
}

} // namespace slpfactor
