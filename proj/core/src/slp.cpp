#include "slpfactor/slp.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace slpfactor {

bool Slp::has_div() const {
    for (const auto& n : nodes)
        if (n.op == Op::Div) return true;
    return false;
}

bool Slp::has_eps_constants() const {
    for (const auto& c : constants)
        if (!(c.is_polynomial() && c.num().degree() <= 0)) return true;
    return false;
}

Rat Slp::constant_as_rat(int i) const {
    const EpsScalar& c = constants.at(static_cast<std::size_t>(i));
    if (!c.is_polynomial() || c.num().degree() > 0)
        throw NotDefinedAtZero("constant is not a plain rational");
    return c.num().coeff(0) / c.den().coeff(0);
}

void Slp::validate() const {
    auto check = [&](const Ref& r, int node_idx) {
        switch (r.kind) {
            case Ref::Kind::Input:
                if (r.idx < 0 || r.idx >= arity())
                    throw ParseError("input ref out of range");
                break;
            case Ref::Kind::Const:
                if (r.idx < 0 || r.idx >= static_cast<int>(constants.size()))
                    throw ParseError("constant ref out of range");
                break;
            case Ref::Kind::Node:
                if (r.idx < 0 || r.idx >= node_idx)
                    throw ParseError("forward or out-of-range node ref");
                break;
        }
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        check(nodes[i].a, static_cast<int>(i));
        check(nodes[i].b, static_cast<int>(i));
        if (nodes[i].op == Op::Div && !rational_mode)
            throw ParseError("div node outside rational mode");
    }
    for (const auto& r : outputs) check(r, length());
}

Slp Slp::without_dead_nodes() const {
    std::vector<bool> live(nodes.size(), false);
    std::vector<Ref> stack = outputs;
    while (!stack.empty()) {
        Ref r = stack.back();
        stack.pop_back();
        if (r.kind != Ref::Kind::Node) continue;
        auto i = static_cast<std::size_t>(r.idx);
        if (live[i]) continue;
        live[i] = true;
        stack.push_back(nodes[i].a);
        stack.push_back(nodes[i].b);
    }
    std::vector<int> remap(nodes.size(), -1);
    Slp out;
    out.input_names = input_names;
    out.constants = constants;
    out.rational_mode = rational_mode;
    auto fix = [&](Ref r) {
        if (r.kind == Ref::Kind::Node) r.idx = remap[static_cast<std::size_t>(r.idx)];
        return r;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!live[i]) continue;
        remap[i] = static_cast<int>(out.nodes.size());
        out.nodes.push_back({nodes[i].op, fix(nodes[i].a), fix(nodes[i].b)});
    }
    for (const auto& r : outputs) out.outputs.push_back(fix(r));
    return out;
}

ComplexityReport complexity_report(const Slp& slp) {
    ComplexityReport rep;
    rep.length = slp.length();
    for (const auto& n : slp.nodes) {
        bool nonscalar = n.a.kind != Slp::Ref::Kind::Const &&
                         n.b.kind != Slp::Ref::Kind::Const;
        if ((n.op == Slp::Op::Mul || n.op == Slp::Op::Div) && nonscalar)
            ++rep.mul_count;
    }
    return rep;
}

// --- parsing --------------------------------------------------------------

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> parts;
    std::string w;
    while (in >> w) parts.push_back(w);
    return parts;
}

} // namespace

Slp parse_slp(const std::string& text) {
    Slp slp;
    std::unordered_map<std::string, Slp::Ref> symbols;
    bool saw_inputs = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto parts = split_ws(line);
        if (parts.empty()) continue;
        if (parts[0] == "mode:") {
            if (saw_inputs || parts.size() != 2 || parts[1] != "rational")
                fail("bad mode header");
            slp.rational_mode = true;
        } else if (parts[0] == "inputs") {
            if (saw_inputs) fail("duplicate inputs line");
            saw_inputs = true;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                if (!is_identifier(parts[i])) fail("bad input name '" + parts[i] + "'");
                if (symbols.count(parts[i])) fail("duplicate name '" + parts[i] + "'");
                symbols[parts[i]] = Slp::Ref{Slp::Ref::Kind::Input,
                                             static_cast<int>(slp.input_names.size())};
                slp.input_names.push_back(parts[i]);
            }
            if (slp.input_names.empty()) fail("inputs line without variables");
        } else if (parts[0] == "const") {
            // const name = literal  (literal may contain no spaces after join)
            if (parts.size() < 4 || parts[2] != "=") fail("bad const line");
            if (!is_identifier(parts[1])) fail("bad const name '" + parts[1] + "'");
            if (symbols.count(parts[1])) fail("duplicate name '" + parts[1] + "'");
            std::string literal;
            for (std::size_t i = 3; i < parts.size(); ++i) literal += parts[i];
            symbols[parts[1]] = Slp::Ref{Slp::Ref::Kind::Const,
                                         static_cast<int>(slp.constants.size())};
            slp.constants.push_back(parse_eps_scalar(literal));
        } else if (parts[0] == "output") {
            if (parts.size() != 2) fail("bad output line");
            auto it = symbols.find(parts[1]);
            if (it == symbols.end()) fail("unknown name '" + parts[1] + "'");
            slp.outputs.push_back(it->second);
        } else {
            // name = op a b
            if (parts.size() != 5 || parts[1] != "=") fail("bad instruction");
            if (!is_identifier(parts[0])) fail("bad node name '" + parts[0] + "'");
            if (symbols.count(parts[0])) fail("duplicate name '" + parts[0] + "'");
            Slp::Op op;
            if (parts[2] == "add") op = Slp::Op::Add;
            else if (parts[2] == "sub") op = Slp::Op::Sub;
            else if (parts[2] == "mul") op = Slp::Op::Mul;
            else if (parts[2] == "div") op = Slp::Op::Div;
            else { fail("unknown op '" + parts[2] + "'"); return slp; }
            if (op == Slp::Op::Div && !slp.rational_mode)
                fail("div requires 'mode: rational' header");
            auto resolve = [&](const std::string& name) {
                auto sit = symbols.find(name);
                if (sit == symbols.end()) fail("unknown operand '" + name + "'");
                return sit->second;
            };
            Slp::Ref a = resolve(parts[3]);
            Slp::Ref b = resolve(parts[4]);
            symbols[parts[0]] =
                Slp::Ref{Slp::Ref::Kind::Node, static_cast<int>(slp.nodes.size())};
            slp.nodes.push_back({op, a, b});
        }
    }
    if (!saw_inputs) throw ParseError("missing inputs line");
    if (slp.outputs.empty()) throw ParseError("missing output line");
    slp.validate();
    return slp;
}

Slp parse_slp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_slp(buf.str());
}

std::string to_text(const Slp& slp) {
    std::ostringstream out;
    if (slp.rational_mode) out << "mode: rational\n";
    out << "inputs";
    for (const auto& n : slp.input_names) out << " " << n;
    out << "\n";
    for (std::size_t i = 0; i < slp.constants.size(); ++i)
        out << "const c" << i + 1 << " = " << to_string(slp.constants[i]) << "\n";
    auto name = [&](const Slp::Ref& r) -> std::string {
        switch (r.kind) {
            case Slp::Ref::Kind::Input:
                return slp.input_names[static_cast<std::size_t>(r.idx)];
            case Slp::Ref::Kind::Const: return "c" + std::to_string(r.idx + 1);
            default: return "v" + std::to_string(r.idx + 1);
        }
    };
    static const char* kOp[] = {"add", "sub", "mul", "div"};
    for (std::size_t i = 0; i < slp.nodes.size(); ++i) {
        const auto& n = slp.nodes[i];
        out << "v" << i + 1 << " = " << kOp[static_cast<int>(n.op)] << " "
            << name(n.a) << " " << name(n.b) << "\n";
    }
    for (const auto& r : slp.outputs) out << "output " << name(r) << "\n";
    return out.str();
}

// --- evaluation -----------------------------------------------------------

std::vector<EpsScalar> eval_eps(const Slp& slp, const std::vector<EpsScalar>& point) {
    return eval_slp(slp, point, [](const EpsScalar& c) { return c; });
}

std::vector<Rat> eval_rat(const Slp& slp, const std::vector<Rat>& point) {
    std::vector<Rat> consts;
    for (std::size_t k = 0; k < slp.constants.size(); ++k)
        consts.push_back(slp.constant_as_rat(static_cast<int>(k)));
    return eval_slp(slp, point, [&, j = std::size_t{0}](const EpsScalar&) mutable {
        return consts[j++];
    });
}

MPoly<EpsScalar> expand_eps(const Slp& slp, int output) {
    auto n = static_cast<std::size_t>(slp.arity());
    std::vector<MPoly<EpsScalar>> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(MPoly<EpsScalar>::variable(i, n));
    auto res = eval_slp(slp, vars,
                        [&](const EpsScalar& c) { return MPoly<EpsScalar>(c, n); });
    return res.at(static_cast<std::size_t>(output));
}

MPoly<Rat> expand_rat(const Slp& slp, int output) {
    auto n = static_cast<std::size_t>(slp.arity());
    std::vector<MPoly<Rat>> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(MPoly<Rat>::variable(i, n));
    std::vector<Rat> consts;
    for (std::size_t k = 0; k < slp.constants.size(); ++k)
        consts.push_back(slp.constant_as_rat(static_cast<int>(k)));
    auto res = eval_slp(slp, vars, [&, j = std::size_t{0}](const EpsScalar&) mutable {
        return MPoly<Rat>(consts[j++], n);
    });
    return res.at(static_cast<std::size_t>(output));
}

RatFunc<EpsScalar> expand_ratfunc(const Slp& slp, int output) {
    auto n = static_cast<std::size_t>(slp.arity());
    std::vector<RatFunc<EpsScalar>> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(RatFunc<EpsScalar>(MPoly<EpsScalar>::variable(i, n)));
    auto res = eval_slp(slp, vars, [&](const EpsScalar& c) {
        return RatFunc<EpsScalar>(MPoly<EpsScalar>(c, n));
    });
    return res.at(static_cast<std::size_t>(output));
}

RatFunc<Rat> specialize_fraction(const RatFunc<EpsScalar>& f) {
    if (f.is_zero_val()) return RatFunc<Rat>();
    long vden = 0;
    bool first = true;
    for (const auto& [e, c] : f.den().terms()) {
        long o = c.order();
        vden = first ? o : std::min(vden, o);
        first = false;
    }
    auto scale = [&](const EpsScalar& c) {
        if (vden >= 0) return c * EpsScalar::eps_inv(static_cast<std::size_t>(vden));
        return c * EpsScalar::eps(static_cast<std::size_t>(-vden));
    };
    MPoly<EpsScalar> num = f.num().map_coeffs<EpsScalar>(scale);
    MPoly<EpsScalar> den = f.den().map_coeffs<EpsScalar>(scale);
    return RatFunc<Rat>(specialize(num), specialize(den));
}

// --- builder --------------------------------------------------------------

SlpBuilder::SlpBuilder(std::vector<std::string> input_names, bool rational_mode) {
    slp_.input_names = std::move(input_names);
    slp_.rational_mode = rational_mode;
}

SlpBuilder::Ref SlpBuilder::constant(const EpsScalar& c) {
    for (std::size_t i = 0; i < slp_.constants.size(); ++i)
        if (slp_.constants[i] == c)
            return Ref{Ref::Kind::Const, static_cast<int>(i)};
    slp_.constants.push_back(c);
    return Ref{Ref::Kind::Const, static_cast<int>(slp_.constants.size()) - 1};
}

SlpBuilder::Ref SlpBuilder::emit(Slp::Op op, Ref a, Ref b) {
    slp_.nodes.push_back({op, a, b});
    return Ref{Ref::Kind::Node, static_cast<int>(slp_.nodes.size()) - 1};
}

SlpBuilder::Ref SlpBuilder::add(Ref a, Ref b) {
    if (is_const(a) && is_const(b)) return constant(const_value(a) + const_value(b));
    if (is_const(a) && is_zero(const_value(a))) return b;
    if (is_const(b) && is_zero(const_value(b))) return a;
    return emit(Slp::Op::Add, a, b);
}

SlpBuilder::Ref SlpBuilder::sub(Ref a, Ref b) {
    if (is_const(a) && is_const(b)) return constant(const_value(a) - const_value(b));
    if (is_const(b) && is_zero(const_value(b))) return a;
    return emit(Slp::Op::Sub, a, b);
}

SlpBuilder::Ref SlpBuilder::mul(Ref a, Ref b) {
    if (is_const(a) && is_const(b)) return constant(const_value(a) * const_value(b));
    if (is_const(a)) {
        if (is_zero(const_value(a))) return a;
        if (is_one(const_value(a))) return b;
    }
    if (is_const(b)) {
        if (is_zero(const_value(b))) return b;
        if (is_one(const_value(b))) return a;
    }
    return emit(Slp::Op::Mul, a, b);
}

SlpBuilder::Ref SlpBuilder::div(Ref a, Ref b) {
    if (is_const(b)) {
        if (is_zero(const_value(b))) throw DivisionByZero("division by zero constant");
        return mul(a, constant(inv(const_value(b))));
    }
    if (is_const(a) && is_zero(const_value(a))) return a;
    if (!slp_.rational_mode) slp_.rational_mode = true;
    return emit(Slp::Op::Div, a, b);
}

SlpBuilder::Ref SlpBuilder::pow(Ref a, unsigned long e) {
    if (e == 0) return constant(Rat(1));
    Ref acc = a;
    // binary powering, highest bit first
    int top = 63;
    while (top > 0 && !((e >> top) & 1)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = mul(acc, acc);
        if ((e >> bit) & 1) acc = mul(acc, a);
    }
    return acc;
}

SlpBuilder::Ref emit_mpoly_eps(SlpBuilder& b, const MPoly<EpsScalar>& p) {
    SlpBuilder::Ref acc = b.constant(Rat(0));
    for (const auto& [e, c] : p.terms()) {
        SlpBuilder::Ref term = b.constant(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = b.mul(term, b.pow(b.input(static_cast<int>(i)),
                                         static_cast<unsigned long>(e[i])));
        acc = b.add(acc, term);
    }
    return acc;
}

SlpBuilder::Ref emit_mpoly(SlpBuilder& b, const MPoly<Rat>& p) {
    return emit_mpoly_eps(b, to_eps(p));
}

Slp slp_from_mpoly(const MPoly<Rat>& p, std::vector<std::string> input_names) {
    if (p.arity() > input_names.size())
        throw ArityMismatch("not enough input names for polynomial arity");
    SlpBuilder b(std::move(input_names));
    b.set_outputs({emit_mpoly(b, p)});
    return std::move(b).take();
}

// --- transforms -----------------------------------------------------------

namespace {

// Re-emits the nodes of `src` into `b`, with inputs replaced by the given
// refs; returns the refs corresponding to src's outputs.
std::vector<SlpBuilder::Ref> splice(SlpBuilder& b, const Slp& src,
                                    const std::vector<SlpBuilder::Ref>& input_map,
                                    const std::vector<EpsScalar>* const_override =
                                        nullptr) {
    std::vector<SlpBuilder::Ref> node_map;
    auto resolve = [&](const Slp::Ref& r) -> SlpBuilder::Ref {
        switch (r.kind) {
            case Slp::Ref::Kind::Input:
                return input_map.at(static_cast<std::size_t>(r.idx));
            case Slp::Ref::Kind::Const:
                return b.constant(const_override
                                      ? (*const_override)[static_cast<std::size_t>(r.idx)]
                                      : src.constants[static_cast<std::size_t>(r.idx)]);
            default: return node_map.at(static_cast<std::size_t>(r.idx));
        }
    };
    for (const auto& n : src.nodes) {
        SlpBuilder::Ref a = resolve(n.a), bb = resolve(n.b);
        switch (n.op) {
            case Slp::Op::Add: node_map.push_back(b.add(a, bb)); break;
            case Slp::Op::Sub: node_map.push_back(b.sub(a, bb)); break;
            case Slp::Op::Mul: node_map.push_back(b.mul(a, bb)); break;
            case Slp::Op::Div: node_map.push_back(b.div(a, bb)); break;
        }
    }
    std::vector<SlpBuilder::Ref> outs;
    for (const auto& r : src.outputs) outs.push_back(resolve(r));
    return outs;
}

} // namespace

MPoly<Rat> TransformRecord::apply(const MPoly<Rat>& g) const {
    std::size_t n = shift.size();
    std::vector<MPoly<Rat>> images;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        MPoly<Rat> img = MPoly<Rat>::variable(i, n);
        img += MPoly<Rat>::variable(n - 1, n).scaled(u.at(i));
        img += MPoly<Rat>(shift[i], n);
        images.push_back(std::move(img));
    }
    MPoly<Rat> yimg = MPoly<Rat>::variable(n - 1, n).scaled(v);
    yimg += MPoly<Rat>(shift[n - 1], n);
    images.push_back(std::move(yimg));
    MPoly<Rat> gg = g;
    gg.set_arity(n);
    return gg.substitute(images);
}

MPoly<Rat> TransformRecord::invert(const MPoly<Rat>& g) const {
    std::size_t n = shift.size();
    Rat vi = inv(v);
    // y_new = (Y - s_y) / v;  x_new_i = X_i - s_i - u_i * y_new
    MPoly<Rat> ynew = MPoly<Rat>::variable(n - 1, n).scaled(vi);
    ynew -= MPoly<Rat>(shift[n - 1] * vi, n);
    std::vector<MPoly<Rat>> images;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        MPoly<Rat> img = MPoly<Rat>::variable(i, n);
        img -= MPoly<Rat>(shift[i], n);
        img -= ynew.scaled(u.at(i));
        images.push_back(std::move(img));
    }
    images.push_back(ynew);
    MPoly<Rat> gg = g;
    gg.set_arity(n);
    return gg.substitute(images);
}

SubstitutionResult substitute_linear(const Slp& slp, const std::vector<Rat>& u,
                                     const Rat& v, const std::vector<Rat>& shift) {
    auto n = static_cast<std::size_t>(slp.arity());
    if (is_zero(v)) throw Singular("v must be nonzero in substitute_linear");
    if (u.size() + 1 != n || shift.size() != n)
        throw ArityMismatch("u/shift arity mismatch");
    SlpBuilder b(slp.input_names, slp.rational_mode);
    SlpBuilder::Ref y = b.input(static_cast<int>(n) - 1);
    std::vector<SlpBuilder::Ref> images;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        SlpBuilder::Ref img = b.input(static_cast<int>(i));
        if (!is_zero(u[i])) img = b.add(img, b.mul(y, b.constant(u[i])));
        if (!is_zero(shift[i])) img = b.add(img, b.constant(shift[i]));
        images.push_back(img);
    }
    SlpBuilder::Ref yimg = b.mul(y, b.constant(v));
    if (!is_zero(shift[n - 1])) yimg = b.add(yimg, b.constant(shift[n - 1]));
    images.push_back(yimg);
    b.set_outputs(splice(b, slp, images));
    SubstitutionResult res{std::move(b).take(), TransformRecord{u, v, shift}};
    return res;
}

Slp perturb(const Slp& slp) {
    auto n = static_cast<std::size_t>(slp.arity());
    if (n == 0) throw ArityMismatch("perturb needs at least the Y input");
    // f(0, eps), folded into a single constant.
    std::vector<EpsScalar> at;
    at.assign(n, EpsScalar(Rat(0)));
    at[n - 1] = EpsScalar::eps();
    EpsScalar f0eps = eval_eps(slp, at).at(0);

    SlpBuilder b(slp.input_names, slp.rational_mode);
    std::vector<SlpBuilder::Ref> images;
    for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(b.input(static_cast<int>(i)));
    images.push_back(b.add(b.input(static_cast<int>(n) - 1),
                           b.constant(EpsScalar::eps())));
    SlpBuilder::Ref out = splice(b, slp, images).at(0);
    out = b.sub(out, b.constant(f0eps));
    b.set_outputs({out});
    return std::move(b).take();
}

ComposeResult compose_approx(const Slp& outer, const Slp& inner,
                             std::optional<unsigned long> n_max_opt) {
    unsigned long n_max = 1UL << 16;
    if (const char* env = std::getenv("SLPFACTOR_NMAX"))
        n_max = std::strtoul(env, nullptr, 10);
    if (n_max_opt) n_max = *n_max_opt;
    if (outer.arity() != inner.arity() + 1)
        throw ArityMismatch("outer must have exactly one extra (last) input for g");

    auto n = static_cast<std::size_t>(inner.arity());
    // Expected value: (outer at eps=0) applied to (inner at eps=0).
    RatFunc<Rat> inner0 = specialize_fraction(expand_ratfunc(inner));
    RatFunc<Rat> outer0 = specialize_fraction(expand_ratfunc(outer));
    std::vector<RatFunc<Rat>> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(RatFunc<Rat>(MPoly<Rat>::variable(i, n)));
    images.push_back(inner0);
    auto subst = [&](const MPoly<Rat>& p) {
        MPoly<Rat> q = p;
        q.set_arity(n + 1);
        return q.eval(images, [&](const Rat& c) {
            return RatFunc<Rat>(MPoly<Rat>(c, n));
        });
    };
    RatFunc<Rat> expected = subst(outer0.num()) / subst(outer0.den());

    for (unsigned long N = 1; N <= n_max; N *= 2) {
        std::vector<EpsScalar> inner_consts;
        for (const auto& c : inner.constants)
            inner_consts.push_back(c.compose_power(static_cast<std::size_t>(N)));
        SlpBuilder b(inner.input_names, outer.rational_mode || inner.rational_mode);
        std::vector<SlpBuilder::Ref> in_map;
        for (std::size_t i = 0; i < n; ++i) in_map.push_back(b.input(static_cast<int>(i)));
        SlpBuilder::Ref g = splice(b, inner, in_map, &inner_consts).at(0);
        std::vector<SlpBuilder::Ref> outer_map = in_map;
        outer_map.push_back(g);
        b.set_outputs(splice(b, outer, outer_map));
        Slp candidate = std::move(b).take();
        try {
            RatFunc<Rat> got = specialize_fraction(expand_ratfunc(candidate));
            if (got == expected) return ComposeResult{std::move(candidate), N};
        } catch (const NotDefinedAtZero&) {
        } catch (const DivisionByZero&) {
        }
    }
    throw NoValidOrder("no order N <= " + std::to_string(n_max) + " works");
}

} // namespace slpfactor
