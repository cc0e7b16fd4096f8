#include "slpfactor/approx.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace slpfactor {

namespace {

long dot(const std::vector<long>& w, const Expo& e) {
    long acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * (i < e.size() ? e[i] : 0);
    return acc;
}

EpsScalar eps_power(long k) {
    if (k >= 0) return EpsScalar::eps(static_cast<std::size_t>(k));
    return EpsScalar::eps_inv(static_cast<std::size_t>(-k));
}

std::vector<long> primitive(std::vector<long> w) {
    long g = 0;
    for (long x : w) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (long& x : w) x /= g;
    return w;
}

} // namespace

WitnessReport verify_witness(const ApproxWitness& w) {
    MPoly<EpsScalar> val;
    try {
        val = expand_eps(w.circuit);
    } catch (const Error& e) {
        throw WitnessInvalid(std::string("expansion failed: ") + e.what());
    }
    MPoly<Rat> target = w.target;
    target.set_arity(std::max(target.arity(), val.arity()));
    val.set_arity(target.arity());
    auto names = default_var_names(target.arity(), false);
    long q = w.order.value_or(0);

    // Every monomial of eps^(-q) * expand must be pole-free and specialize
    // to the matching target coefficient.
    auto monomials = val.support();
    for (const auto& e : target.support())
        if (std::find(monomials.begin(), monomials.end(), e) == monomials.end())
            monomials.push_back(e);
    for (const auto& e : monomials) {
        EpsScalar c = val.coeff(e) * eps_power(-q);
        MPoly<Rat> mono;
        mono.set_arity(target.arity());
        mono.add_term(e, Rat(1));
        if (!c.defined_at_zero())
            throw WitnessInvalid("monomial " + to_string(mono, names) +
                                 " is not defined at eps = 0");
        if (c.at_zero() != target.coeff(e))
            throw WitnessInvalid("monomial " + to_string(mono, names) +
                                 " specializes to the wrong coefficient");
    }
    return WitnessReport{w.circuit.length(), w.order};
}

std::pair<long, MPoly<Rat>> infer_order(const Slp& f, int output) {
    for (const auto& c : f.constants)
        if (!c.defined_at_zero())
            throw NotDefinedAtZero("constant has a pole at eps = 0");
    MPoly<EpsScalar> val = expand_eps(f, output);
    if (val.is_zero_poly()) throw ZeroPolynomial("expansion is zero");
    bool first = true;
    long q = 0;
    for (auto& [e, c] : val.terms()) {
        long o = c.order();
        q = first ? o : std::min(q, o);
        first = false;
    }
    MPoly<Rat> spec;
    spec.set_arity(val.arity());
    for (auto& [e, c] : val.terms()) {
        Rat v = (c * eps_power(-q)).at_zero();
        if (!is_zero(v)) spec.add_term(e, v);
    }
    return {q, spec};
}

LaurentResult laurent_to_power(const Slp& f) {
    using Ref = SlpBuilder::Ref;
    struct Tracked {
        long alpha = 0;  // value = eps^(-alpha) * wire
        Ref wire;
    };
    SlpBuilder b(f.input_names, f.rational_mode);
    auto scaled = [&](const Tracked& t, long target_alpha) {
        // Re-express with a larger alpha: multiply the wire by eps^k.
        long k = target_alpha - t.alpha;
        if (k == 0) return t.wire;
        return b.mul(t.wire, b.constant(EpsScalar::eps(static_cast<std::size_t>(k))));
    };
    std::vector<Tracked> vals;
    auto get = [&](const Slp::Ref& r) -> Tracked {
        switch (r.kind) {
            case Slp::Ref::Kind::Input:
                return Tracked{0, b.input(r.idx)};
            case Slp::Ref::Kind::Const: {
                const EpsScalar& c = f.constants[static_cast<std::size_t>(r.idx)];
                if (c.is_zero_val()) return Tracked{0, b.constant(Rat(0))};
                long alpha = -c.order();
                return Tracked{alpha, b.constant(c * eps_power(alpha))};
            }
            default: return vals[static_cast<std::size_t>(r.idx)];
        }
    };
    for (const auto& node : f.nodes) {
        Tracked x = get(node.a), y = get(node.b), r;
        switch (node.op) {
            case Slp::Op::Add:
            case Slp::Op::Sub: {
                r.alpha = std::max(x.alpha, y.alpha);
                Ref xa = scaled(x, r.alpha), ya = scaled(y, r.alpha);
                r.wire = node.op == Slp::Op::Add ? b.add(xa, ya) : b.sub(xa, ya);
                break;
            }
            case Slp::Op::Mul:
                r.alpha = x.alpha + y.alpha;
                r.wire = b.mul(x.wire, y.wire);
                break;
            case Slp::Op::Div:
                r.alpha = x.alpha - y.alpha;
                r.wire = b.div(x.wire, y.wire);
                break;
        }
        vals.push_back(r);
    }
    Tracked out = get(f.outputs.at(0));
    long q = out.alpha;
    if (q < 0) {
        // Fold the surplus eps power into the output so q stays natural.
        out.wire = scaled(out, 0);
        q = 0;
    }
    b.set_outputs({out.wire});
    return LaurentResult{std::move(b).take(), q};
}

MPoly<Rat> initial_form(const MPoly<Rat>& f, const std::vector<long>& w) {
    if (f.is_zero_poly()) throw ZeroPolynomial("initial form of zero");
    bool first = true;
    long best = 0;
    for (auto& [e, c] : f.terms()) {
        long v = dot(w, e);
        best = first ? v : std::min(best, v);
        first = false;
    }
    MPoly<Rat> out;
    out.set_arity(f.arity());
    for (auto& [e, c] : f.terms())
        if (dot(w, e) == best) out.add_term(e, c);
    return out;
}

ApproxWitness initial_term_degeneration(const Slp& f, const NewtonFace& face) {
    auto n = static_cast<std::size_t>(f.arity());
    if (face.w.size() != n) throw ArityMismatch("face normal arity mismatch");
    MPoly<Rat> fp = expand_rat(f);
    if (fp.is_zero_poly()) throw ZeroPolynomial("zero polynomial has no faces");
    // Validity: <w,a> >= c on the support, equality exactly on face.support.
    MPoly<Rat> target;
    target.set_arity(n);
    for (auto& [e, c] : fp.terms()) {
        long v = dot(face.w, e);
        if (v < face.c) throw InvalidFace("support point below the hyperplane");
        bool on_face = std::find(face.support.begin(), face.support.end(), e) !=
                       face.support.end();
        if ((v == face.c) != on_face)
            throw InvalidFace("face support does not match the equality set");
        if (on_face) target.add_term(e, c);
    }
    if (target.is_zero_poly()) throw InvalidFace("empty face support");

    SlpBuilder b(f.input_names, f.rational_mode);
    std::vector<SlpBuilder::Ref> images;
    for (std::size_t i = 0; i < n; ++i) {
        SlpBuilder::Ref x = b.input(static_cast<int>(i));
        if (face.w[i] != 0) x = b.mul(x, b.constant(eps_power(face.w[i])));
        images.push_back(x);
    }
    std::vector<EpsScalar> consts = f.constants;
    SlpBuilder::Ref out;
    {
        std::vector<SlpBuilder::Ref> node_map;
        auto resolve = [&](const Slp::Ref& r) -> SlpBuilder::Ref {
            switch (r.kind) {
                case Slp::Ref::Kind::Input:
                    return images[static_cast<std::size_t>(r.idx)];
                case Slp::Ref::Kind::Const:
                    return b.constant(consts[static_cast<std::size_t>(r.idx)]);
                default: return node_map[static_cast<std::size_t>(r.idx)];
            }
        };
        for (const auto& nd : f.nodes) {
            SlpBuilder::Ref a = resolve(nd.a), bb = resolve(nd.b);
            switch (nd.op) {
                case Slp::Op::Add: node_map.push_back(b.add(a, bb)); break;
                case Slp::Op::Sub: node_map.push_back(b.sub(a, bb)); break;
                case Slp::Op::Mul: node_map.push_back(b.mul(a, bb)); break;
                case Slp::Op::Div: node_map.push_back(b.div(a, bb)); break;
            }
        }
        out = resolve(f.outputs.at(0));
    }
    out = b.mul(out, b.constant(eps_power(-face.c)));
    b.set_outputs({out});
    return ApproxWitness{std::move(b).take(), std::move(target), std::nullopt};
}

namespace {

// Face from a candidate normal: supports iff the argmin set contains the
// generating points (when given).
std::optional<NewtonFace> face_from_normal(const std::vector<Expo>& supp,
                                           std::vector<long> w,
                                           const std::vector<Expo>* require) {
    bool nonzero = false;
    for (long x : w) nonzero |= x != 0;
    if (!nonzero) return std::nullopt;
    w = primitive(std::move(w));
    long c = dot(w, supp[0]);
    for (const auto& e : supp) c = std::min(c, dot(w, e));
    std::vector<Expo> on;
    for (const auto& e : supp)
        if (dot(w, e) == c) on.push_back(e);
    if (require)
        for (const auto& e : *require)
            if (std::find(on.begin(), on.end(), e) == on.end()) return std::nullopt;
    return NewtonFace{std::move(w), c, std::move(on)};
}

int affine_rank(const std::vector<Expo>& pts, std::size_t n) {
    // Rank of the difference set, by fraction-free elimination over longs
    // promoted to rationals.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> r;
        for (std::size_t j = 0; j < n; ++j)
            r.push_back(Rat((j < pts[i].size() ? pts[i][j] : 0) -
                            (j < pts[0].size() ? pts[0][j] : 0)));
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (!is_zero(rows[r][col])) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (is_zero(rows[r][col])) continue;
            Rat m = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
            for (std::size_t cc = col; cc < n; ++cc)
                rows[r][cc] -= m * rows[static_cast<std::size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

std::vector<long> diff(const Expo& a, const Expo& b, std::size_t n) {
    std::vector<long> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    return d;
}

std::vector<long> cross(const std::vector<long>& a, const std::vector<long>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace

std::vector<NewtonFace> newton_polytope_faces(const MPoly<Rat>& f) {
    if (f.is_zero_poly()) throw ZeroPolynomial("zero polynomial has no polytope");
    std::size_t n = std::max<std::size_t>(f.arity(), 1);
    if (n > 3) throw ArityMismatch("face enumeration implemented for n <= 3");
    std::vector<Expo> supp = f.support();
    std::vector<NewtonFace> out;
    auto push = [&](std::optional<NewtonFace> face) {
        if (!face) return;
        for (const auto& g : out)
            if (g.w == face->w) return;
        out.push_back(std::move(*face));
    };
    int rank = affine_rank(supp, n);

    if (rank == 0) {
        // A point: one supporting normal per sign pattern.
        std::vector<long> w(n, 1);
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<long> ww(n);
            for (std::size_t i = 0; i < n; ++i) ww[i] = (mask >> i) & 1 ? -1 : 1;
            push(face_from_normal(supp, ww, nullptr));
        }
        return out;
    }
    if (n == 1) {
        push(face_from_normal(supp, {1}, nullptr));
        push(face_from_normal(supp, {-1}, nullptr));
        return out;
    }
    if (n == 2) {
        if (rank == 2) {
            for (std::size_t i = 0; i < supp.size(); ++i)
                for (std::size_t j = i + 1; j < supp.size(); ++j) {
                    auto d = diff(supp[j], supp[i], n);
                    std::vector<long> w{-d[1], d[0]};
                    std::vector<Expo> req{supp[i], supp[j]};
                    push(face_from_normal(supp, w, &req));
                    for (long& x : w) x = -x;
                    push(face_from_normal(supp, w, &req));
                }
        } else {  // collinear: the endpoints, plus the polytope itself
            auto d = diff(supp.back(), supp.front(), n);
            push(face_from_normal(supp, d, nullptr));
            push(face_from_normal(supp, {-d[0], -d[1]}, nullptr));
            push(face_from_normal(supp, {-d[1], d[0]}, nullptr));
            push(face_from_normal(supp, {d[1], -d[0]}, nullptr));
        }
        return out;
    }
    // n == 3
    if (rank == 3) {
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i + 1; j < supp.size(); ++j)
                for (std::size_t k = j + 1; k < supp.size(); ++k) {
                    auto w = cross(diff(supp[j], supp[i], n), diff(supp[k], supp[i], n));
                    std::vector<Expo> req{supp[i], supp[j], supp[k]};
                    push(face_from_normal(supp, w, &req));
                    for (long& x : w) x = -x;
                    push(face_from_normal(supp, w, &req));
                }
    } else if (rank == 2) {
        // Planar: the plane itself both ways, and its edges.
        std::vector<long> m;
        for (std::size_t j = 1; j < supp.size() && m.empty(); ++j)
            for (std::size_t k = j + 1; k < supp.size(); ++k) {
                auto c = cross(diff(supp[j], supp[0], n), diff(supp[k], supp[0], n));
                if (c[0] || c[1] || c[2]) {
                    m = c;
                    break;
                }
            }
        push(face_from_normal(supp, m, nullptr));
        push(face_from_normal(supp, {-m[0], -m[1], -m[2]}, nullptr));
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i + 1; j < supp.size(); ++j) {
                auto w = cross(m, diff(supp[j], supp[i], n));
                std::vector<Expo> req{supp[i], supp[j]};
                push(face_from_normal(supp, w, &req));
                for (long& x : w) x = -x;
                push(face_from_normal(supp, w, &req));
            }
    } else {  // rank == 1: a segment in space
        auto d = diff(supp.back(), supp.front(), n);
        push(face_from_normal(supp, d, nullptr));
        push(face_from_normal(supp, {-d[0], -d[1], -d[2]}, nullptr));
        for (auto axis : {std::vector<long>{1, 0, 0}, std::vector<long>{0, 1, 0},
                          std::vector<long>{0, 0, 1}}) {
            auto w = cross(d, axis);
            if (!(w[0] || w[1] || w[2])) continue;
            push(face_from_normal(supp, w, nullptr));
            push(face_from_normal(supp, {-w[0], -w[1], -w[2]}, nullptr));
        }
    }
    return out;
}

} // namespace slpfactor
