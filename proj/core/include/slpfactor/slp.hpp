#ifndef SLPFACTOR_SLP_HPP
#define SLPFACTOR_SLP_HPP

#include <optional>
#include <string>
#include <vector>

#include "slpfactor/mpoly.hpp"
#include "slpfactor/ratfunc.hpp"

namespace slpfactor {

// Straight-line program over variables and EpsScalar constants.
// Node operations cost 1 each; constants and variable fetches are free.
// Div nodes are only permitted in rational mode.
struct Slp {
    enum class Op { Add, Sub, Mul, Div };
    struct Ref {
        enum class Kind { Input, Const, Node };
        Kind kind = Kind::Input;
        int idx = 0;
        friend bool operator==(const Ref&, const Ref&) = default;
    };
    struct Node {
        Op op;
        Ref a, b;
    };

    std::vector<std::string> input_names;
    std::vector<EpsScalar> constants;
    std::vector<Node> nodes;
    std::vector<Ref> outputs;
    bool rational_mode = false;

    int arity() const { return static_cast<int>(input_names.size()); }
    int length() const { return static_cast<int>(nodes.size()); }
    bool has_div() const;
    bool has_eps_constants() const;
    Rat constant_as_rat(int i) const;
    void validate() const;  // ref ordering, div gating

    // Drops nodes not reachable from the outputs (off by default in the
    // pipelines; lengths stay reproducible).
    Slp without_dead_nodes() const;
};

struct ComplexityReport {
    int length = 0;
    std::optional<int> order_q;
    int mul_count = 0;  // nonscalar multiplications/divisions
};

ComplexityReport complexity_report(const Slp& slp);

// --- text format ---------------------------------------------------------
// One instruction per line:
//   mode: rational          (optional header, enables div)
//   inputs X1 X2 Y
//   const c1 = 3/2
//   const c2 = (1)/(eps)
//   v1 = add X1 c1
//   v2 = mul v1 v1
//   output v2
Slp parse_slp(const std::string& text);
Slp parse_slp_file(const std::string& path);
std::string to_text(const Slp& slp);

// --- evaluation ----------------------------------------------------------

template <class V>
V ring_div(const V& a, const V& b) {
    return a / b;
}

template <class S>
UniPoly<S> ring_div(const UniPoly<S>& a, const UniPoly<S>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero_poly()) throw InexactDivision("inexact univariate division");
    return q;
}

inline MPoly<Rat> ring_div(const MPoly<Rat>& a, const MPoly<Rat>& b) {
    return exact_divide(a, b);
}
inline MPoly<EpsScalar> ring_div(const MPoly<EpsScalar>& a,
                                 const MPoly<EpsScalar>& b) {
    return exact_divide(a, b);
}

template <class V, class EmbedFn>
std::vector<V> eval_slp(const Slp& slp, const std::vector<V>& inputs,
                        EmbedFn&& embed) {
    if (inputs.size() != static_cast<std::size_t>(slp.arity()))
        throw ArityMismatch("point arity does not match circuit arity");
    std::vector<V> consts;
    consts.reserve(slp.constants.size());
    for (const auto& c : slp.constants) consts.push_back(embed(c));
    std::vector<V> vals;
    vals.reserve(slp.nodes.size());
    auto get = [&](const Slp::Ref& r) -> const V& {
        switch (r.kind) {
            case Slp::Ref::Kind::Input: return inputs[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const: return consts[static_cast<std::size_t>(r.idx)];
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : slp.nodes) {
        const V& a = get(node.a);
        const V& b = get(node.b);
        switch (node.op) {
            case Slp::Op::Add: vals.push_back(a + b); break;
            case Slp::Op::Sub: vals.push_back(a - b); break;
            case Slp::Op::Mul: vals.push_back(a * b); break;
            case Slp::Op::Div:
                if (is_zero(b)) throw DivisionByZero("divisor evaluates to zero");
                vals.push_back(ring_div(a, b));
                break;
        }
    }
    std::vector<V> out;
    out.reserve(slp.outputs.size());
    for (const auto& r : slp.outputs) out.push_back(get(r));
    return out;
}

std::vector<EpsScalar> eval_eps(const Slp& slp, const std::vector<EpsScalar>& point);
// Requires all constants to be plain rationals.
std::vector<Rat> eval_rat(const Slp& slp, const std::vector<Rat>& point);

// Brute-force expansion (the test oracle). Division nodes must divide
// exactly over the polynomial ring.
MPoly<EpsScalar> expand_eps(const Slp& slp, int output = 0);
MPoly<Rat> expand_rat(const Slp& slp, int output = 0);
// Expansion as a rational function (divisions need not be exact).
RatFunc<EpsScalar> expand_ratfunc(const Slp& slp, int output = 0);

// eps -> 0 on a fraction after clearing the common eps-power of the
// denominator; throws NotDefinedAtZero on a genuine pole.
RatFunc<Rat> specialize_fraction(const RatFunc<EpsScalar>& f);

// --- incremental construction --------------------------------------------

class SlpBuilder {
public:
    explicit SlpBuilder(std::vector<std::string> input_names,
                        bool rational_mode = false);

    using Ref = Slp::Ref;
    Ref input(int i) const { return Ref{Ref::Kind::Input, i}; }
    Ref constant(const EpsScalar& c);
    Ref constant(const Rat& c) { return constant(EpsScalar(c)); }

    // Folding: constant operands are combined without emitting nodes, and
    // the identities x+0, x-0, x*1, x*0, x/1 emit nothing.
    Ref add(Ref a, Ref b);
    Ref sub(Ref a, Ref b);
    Ref mul(Ref a, Ref b);
    Ref div(Ref a, Ref b);
    Ref neg(Ref a) { return sub(constant(Rat(0)), a); }
    Ref pow(Ref a, unsigned long e);

    bool is_const(Ref r) const { return r.kind == Ref::Kind::Const; }
    const EpsScalar& const_value(Ref r) const {
        return slp_.constants[static_cast<std::size_t>(r.idx)];
    }

    void set_outputs(std::vector<Ref> outs) { slp_.outputs = std::move(outs); }
    int length() const { return slp_.length(); }
    Slp take() && { return std::move(slp_); }
    const Slp& peek() const { return slp_; }

private:
    Ref emit(Slp::Op op, Ref a, Ref b);
    Slp slp_;
};

// Circuit computing the given polynomial, built term by term with cached
// variable powers. Used for tests and instance construction, not tuned for
// short length.
Slp slp_from_mpoly(const MPoly<Rat>& p, std::vector<std::string> input_names);
SlpBuilder::Ref emit_mpoly(SlpBuilder& b, const MPoly<Rat>& p);
SlpBuilder::Ref emit_mpoly_eps(SlpBuilder& b, const MPoly<EpsScalar>& p);

// --- structural transforms -----------------------------------------------

// Record of the linear change of coordinates
//   X_i -> X_i + u_i * Y + shift_i   (i < n-1),   Y -> v * Y + shift_{n-1},
// applied to a circuit's inputs; supports inverting the change on a
// recovered polynomial.
struct TransformRecord {
    std::vector<Rat> u;  // size n-1
    Rat v = Rat(1);
    std::vector<Rat> shift;  // size n
    MPoly<Rat> invert(const MPoly<Rat>& g) const;
    MPoly<Rat> apply(const MPoly<Rat>& g) const;
};

struct SubstitutionResult {
    Slp slp;
    TransformRecord record;
};

SubstitutionResult substitute_linear(const Slp& slp, const std::vector<Rat>& u,
                                     const Rat& v, const std::vector<Rat>& shift);

// F(X, Y) = f(X, Y+eps) - f(0, eps); adds at most 2 nodes.
Slp perturb(const Slp& slp);

struct ComposeResult {
    Slp slp;
    unsigned long chosen_n;
};

// Splices `inner` into the last input of `outer`, renaming inner's eps to
// delta and substituting delta = eps^N for the smallest N in {1,2,4,...}
// up to n_max for which the composition specializes at eps=0 to the
// expected value. n_max defaults to 2^16 and honors SLPFACTOR_NMAX.
ComposeResult compose_approx(const Slp& outer, const Slp& inner,
                             std::optional<unsigned long> n_max = std::nullopt);

} // namespace slpfactor

#endif
