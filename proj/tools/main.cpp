// slpfactor command-line driver.

#include <bit>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slpfactor/approx.hpp"
#include "slpfactor/divfree.hpp"
#include "slpfactor/hensel.hpp"
#include "slpfactor/minpoly.hpp"
#include "slpfactor/padic.hpp"

using namespace slpfactor;
using nlohmann::json;

namespace {

bool g_json = false;

void emit(const json& record) {
    std::cout << record.dump() << "\n";
}

void emit_kv(const std::string& key, const std::string& value) {
    if (g_json)
        emit(json{{key, value}});
    else
        std::cout << key << " = " << value << "\n";
}

void emit_kv(const std::string& key, long value) {
    if (g_json)
        emit(json{{key, value}});
    else
        std::cout << key << " = " << value << "\n";
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string y_name(const Slp& slp) {
    if (slp.input_names.empty())
        throw ParseError("circuit has no inputs");
    return slp.input_names.back();
}

std::vector<std::string> x_names(const Slp& slp) {
    auto names = slp.input_names;
    names.pop_back();
    return names;
}

long ceil_log2(long v) {
    if (v <= 1) return 0;
    return static_cast<long>(
        std::bit_width(static_cast<unsigned long>(v - 1)));
}

// ---------------------------------------------------------------- commands

struct RunConfig {
    std::string file;
    std::string point_text;
    std::string p_text;
    std::string w_text;
    std::string g0_text, h0_text;
    std::string u_text;
    std::string method = "newton";
    std::string mode = "approx";
    int output = 0;
    int degree = -1;
    int bound = -1;
    int deg_g = 0;
    long mult = 0;
    long c = 0;
    bool c_given = false;
    bool list_faces = false;
    bool print_circuit = false;
    int truncate = 4;
    bool corrupt = false;
    std::string v_text = "1";
};

void cmd_eval(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    std::vector<Rat> pt = parse_point(cfg.point_text);
    std::vector<EpsScalar> ept;
    ept.reserve(pt.size());
    for (const auto& v : pt) ept.emplace_back(v);
    auto vals = eval_eps(slp, ept);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (g_json)
            emit(json{{"output", i}, {"value", to_string(vals[i])}});
        else if (vals.size() == 1)
            std::cout << "value = " << to_string(vals[i]) << "\n";
        else
            std::cout << "value[" << i << "] = " << to_string(vals[i]) << "\n";
    }
}

void cmd_expand(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    if (slp.has_eps_constants() || slp.has_div()) {
        auto f = expand_eps(slp, cfg.output);
        emit_kv("f", to_string(f, slp.input_names));
    } else {
        auto f = expand_rat(slp, cfg.output);
        emit_kv("f", to_string(f, slp.input_names));
    }
}

void cmd_components(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    if (cfg.degree < 0) throw ParseError("--degree is required");
    auto t = bihom_extract<Rat>(slp, cfg.degree);
    if (g_json) {
        for (int i = 0; i <= t.y_bound(); ++i)
            for (int d = 0; d <= t.x_bound(); ++d) {
                const auto& e = t.entry(i, d);
                if (e.is_zero_poly()) continue;
                emit(json{{"delta", d},
                          {"i", i},
                          {"poly", to_string(e, x_names(slp))}});
            }
    } else {
        std::cout << serialize_bihom(t, x_names(slp));
    }
}

void cmd_padic(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    RatPoly p = parse_unipoly(cfg.p_text, y_name(slp));
    if (p.degree() < 1) throw ParseError("--p must have degree >= 1");
    int bound = cfg.bound;
    if (bound < 0) {
        auto f = expand_rat(slp);
        int dy = std::max(f.degree_in(f.arity() - 1), 0);
        bound = dy / static_cast<int>(p.degree());
    }
    auto t = padic_extract<Rat>(slp, p, bound);
    for (int i = 0; i <= t.bound(); ++i) {
        std::string poly = to_string(t.coeff(i), slp.input_names);
        if (g_json)
            emit(json{{"i", i}, {"poly", poly}});
        else
            std::cout << "a" << i << ": " << poly << "\n";
    }
}

void cmd_trailing(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    RatPoly p = parse_unipoly(cfg.p_text, y_name(slp));
    auto r = trailing_coefficient(slp, p);
    emit_kv("q", r.q);
    emit_kv("f_q", to_string(r.trailing, slp.input_names));
    if (cfg.print_circuit) {
        if (g_json)
            emit(json{{"circuit", to_text(r.circuit)}});
        else
            std::cout << to_text(r.circuit);
    }
}

void cmd_order(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    auto [q, f] = infer_order(slp, cfg.output);
    emit_kv("q", q);
    emit_kv("f", to_string(f, slp.input_names));
}

void cmd_degenerate(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    MPoly<Rat> f = expand_rat(slp);
    if (cfg.list_faces) {
        for (const auto& face : newton_polytope_faces(f)) {
            if (g_json)
                emit(json{{"c", face.c},
                          {"terms", face.support.size()},
                          {"w", join_longs(face.w)}});
            else
                std::cout << "face w=" << join_longs(face.w)
                          << " c=" << face.c << " terms=" << face.support.size()
                          << "\n";
        }
        return;
    }
    if (cfg.w_text.empty()) throw ParseError("--w is required");
    NewtonFace face;
    face.w = parse_longs(cfg.w_text);
    if (face.w.size() != static_cast<std::size_t>(slp.arity()))
        throw ParseError("--w arity does not match the circuit");
    long cmin = 0;
    bool first = true;
    for (const auto& e : f.support()) {
        long dot = 0;
        for (std::size_t i = 0; i < e.size(); ++i) dot += face.w[i] * e[i];
        if (first || dot < cmin) cmin = dot;
        first = false;
    }
    face.c = cfg.c_given ? cfg.c : cmin;
    for (const auto& e : f.support()) {
        long dot = 0;
        for (std::size_t i = 0; i < e.size(); ++i) dot += face.w[i] * e[i];
        if (dot == face.c) face.support.push_back(e);
    }
    ApproxWitness w = initial_term_degeneration(slp, face);
    auto report = verify_witness(w);
    emit_kv("in_f", to_string(w.target, slp.input_names));
    emit_kv("length", static_cast<long>(report.length));
    if (cfg.print_circuit) {
        if (g_json)
            emit(json{{"circuit", to_text(w.circuit)}});
        else
            std::cout << to_text(w.circuit);
    }
}

void cmd_root(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    if (cfg.mult < 1) throw ParseError("--mult must be positive");
    int d = cfg.deg_g;
    if (d <= 0) {
        int dt = expand_rat(slp).total_degree();
        if (dt < 0) throw ParseError("zero circuit has no root degree");
        d = dt / static_cast<int>(cfg.mult);
    }
    MPoly<Rat> g = eth_root(slp, cfg.mult, d);
    emit_kv("g", to_string(g, slp.input_names));
}

void cmd_factor(const RunConfig& cfg) {
    Slp slp = parse_slp_file(cfg.file);
    auto n = static_cast<std::size_t>(slp.arity());
    if (cfg.deg_g < 1) throw ParseError("--deg-g must be positive");
    const int d = cfg.deg_g;
    const long e = cfg.mult;
    if (e < 1) throw ParseError("--mult must be positive");

    op_counters().reset();
    MPoly<Rat> g;
    long bound_value = 0;
    std::string bound_formula;
    if (cfg.method == "hensel") {
        if (cfg.g0_text.empty() || cfg.h0_text.empty())
            throw ParseError("--g0 and --h0 are required for --method hensel");
        RatPoly g0 = parse_unipoly(cfg.g0_text, y_name(slp));
        RatPoly h0 = parse_unipoly(cfg.h0_text, y_name(slp));
        g = hensel_factor(slp, g0, h0, e, d);
        bound_formula = "M(d^3*e)*(L + d*(1+ceil(log2(e))))";
        bound_value = CostModel::mul_cost(static_cast<long>(d) * d * d * e) *
                      (slp.length() + d * (1 + ceil_log2(e)));
    } else if (cfg.method == "newton") {
        std::vector<Rat> point = parse_point(cfg.point_text);
        if (point.empty()) point.assign(n, Rat(0));
        if (point.size() != n)
            throw ParseError("--point arity does not match the circuit");
        std::vector<Rat> u = parse_point(cfg.u_text);
        if (u.empty()) u.assign(n - 1, Rat(0));
        if (u.size() + 1 != n)
            throw ParseError("--u must have one entry per X variable");
        Rat v = parse_rat(cfg.v_text);
        LiftMode mode =
            cfg.mode == "exact" ? LiftMode::Exact : LiftMode::Approx;
        g = reconstruct_factor(slp, d, e, point, u, v, mode);
        bound_formula = "M(d)*M(d^4)*L + d^(2*gamma)*M(d)^2";
        long md = CostModel::mul_cost(d);
        long dpow = 1;
        for (int k = 0; k < 2 * CostModel::mat_solve_exponent; ++k) dpow *= d;
        bound_value =
            md * CostModel::mul_cost(static_cast<long>(d) * d * d * d) *
                slp.length() +
            dpow * md * md;
    } else {
        throw ParseError("--method must be newton or hensel");
    }
    auto ops = op_counters();
    emit_kv("g", to_string(g, slp.input_names));
    emit_kv("length", static_cast<long>(slp.length()));
    emit_kv("measured_adds", static_cast<long>(ops.adds));
    emit_kv("measured_muls", static_cast<long>(ops.muls));
    emit_kv("bound_formula", bound_formula);
    emit_kv("bound_value", bound_value);
}

int cmd_demo_example31(const RunConfig& cfg) {
    const std::vector<std::string> names = {"X", "Y"};
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", names);
    MPoly<Rat> f = g * g;
    Slp fslp = slp_from_mpoly(f, names);
    Slp F = perturb(fslp);

    // First perturbed Newton iterate from 0: Phi1 = -F(X,0)/dF(X,0).
    MPoly<EpsScalar> Fe = expand_eps(F);
    std::vector<MPoly<EpsScalar>> sub = {
        MPoly<EpsScalar>::variable(0, 2),
        MPoly<EpsScalar>(EpsScalar(0), 2)};
    MPoly<EpsScalar> F0 = Fe.substitute(sub);
    MPoly<EpsScalar> dF0 = Fe.derivative(1).substitute(sub);
    RatFunc<EpsScalar> phi1_big(-F0, dF0);

    // Reference closed form: with A = -X^2 + 2e + e^2,
    //   Phi1 = -1/4 * (A^2 - e^2 (2+e)^2) / (A (1+e)).
    EpsScalar a = EpsScalar::eps() * EpsScalar(2) +
                  EpsScalar::eps(2);
    MPoly<EpsScalar> A = to_eps(parse_mpoly("-1*X^2", names));
    A += MPoly<EpsScalar>(a, 2);
    EpsScalar pole_term = EpsScalar::eps(2) *
                          (EpsScalar(2) + EpsScalar::eps()) *
                          (EpsScalar(2) + EpsScalar::eps());
    if (cfg.corrupt) pole_term += EpsScalar(1);  // test hook
    MPoly<EpsScalar> num = A * A - MPoly<EpsScalar>(pole_term, 2);
    MPoly<EpsScalar> den =
        (A * MPoly<EpsScalar>(EpsScalar(1) + EpsScalar::eps(), 2))
            .scaled(EpsScalar(4));
    RatFunc<EpsScalar> reference(-num, den);

    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        if (!ok) ++failures;
        if (g_json)
            emit(json{{"check", name}, {"ok", ok}});
        else
            std::cout << "check " << name << ": " << (ok ? "ok" : "FAIL")
                      << "\n";
    };

    // phi1 for the unperturbed iteration is X^2/2; phi's low parts follow.
    MPoly<Rat> gY0 = g.substitute(
        {MPoly<Rat>::variable(0, 2), MPoly<Rat>(Rat(0), 2)});
    MPoly<Rat> dgY0 = g.derivative(1).substitute(
        {MPoly<Rat>::variable(0, 2), MPoly<Rat>(Rat(0), 2)});
    MPoly<Rat> phi1 = (-gY0).scaled(inv(dgY0.coeff(Expo{0, 0})));
    auto phi = newton_implicit(g, 4);
    if (!g_json) {
        std::cout << "phi1 = " << to_string(phi1, names) << "\n";
        std::cout << "phi  = " << to_string(phi.to_poly(), names) << "\n";
    } else {
        emit(json{{"phi1", to_string(phi1, names)}});
        emit(json{{"phi", to_string(phi.to_poly(), names)}});
    }
    check("phi1-is-half-X2", phi1 == parse_mpoly("1/2*X^2", names) &&
                                 phi.part(2) == phi1);

    check("closed-form", phi1_big == reference);

    RatFunc<Rat> at0 = specialize_fraction(phi1_big);
    check("eps-zero-value",
          at0 == RatFunc<Rat>(parse_mpoly("1/4*X^2", names)));

    int bound = cfg.truncate;
    auto numS = TruncSeries<EpsScalar>::from_poly(-num, bound);
    auto denS = TruncSeries<EpsScalar>::from_poly(den, bound);
    auto S = series_div(numS, denS);
    EpsScalar c2 = S.part(2).coeff(Expo{2, 0});
    check("degree-2-part",
          c2.defined_at_zero() && c2.at_zero() == Rat(1, 2));

    if (bound >= 4) {
        EpsScalar c4 = S.part(4).coeff(Expo{4, 0});
        check("degree-4-pole", !c4.defined_at_zero());
    } else if (!g_json) {
        std::cout << "check degree-4-pole: skipped (truncate < 4)\n";
    } else {
        emit(json{{"check", "degree-4-pole"}, {"skipped", true}});
    }
    return failures == 0 ? 0 : 1;
}

void cmd_bench() {
    const std::vector<std::string> names = {"X", "Y"};
    struct Row {
        std::string name;
        long adds, muls, bound;
        std::string formula;
    };
    std::vector<Row> rows;

    {
        MPoly<Rat> g = parse_mpoly("Y^2 + X", names);
        MPoly<Rat> h = parse_mpoly("Y + 1", names);
        MPoly<Rat> f = g * g * h;
        Slp slp = slp_from_mpoly(f, names);
        op_counters().reset();
        (void)hensel_factor(slp, parse_unipoly("Y^2", "Y"),
                            parse_unipoly("Y + 1", "Y"), 2, 2);
        auto ops = op_counters();
        long bound = CostModel::mul_cost(2 * 2 * 2 * 2) *
                     (slp.length() + 2 * (1 + ceil_log2(2)));
        rows.push_back({"hensel-d2-e2", ops.adds, ops.muls, bound,
                        "M(d^3*e)*(L + d*(1+ceil(log2(e))))"});
    }
    {
        MPoly<Rat> g = parse_mpoly("Y^2 + Y + -1*X", names);
        MPoly<Rat> h = parse_mpoly("Y + 2", names);
        MPoly<Rat> f = g * g * h;
        Slp slp = slp_from_mpoly(f, names);
        op_counters().reset();
        (void)reconstruct_factor(slp, 2, 2, {Rat(0), Rat(0)}, {Rat(0)},
                                 Rat(1));
        auto ops = op_counters();
        long md = CostModel::mul_cost(2);
        long bound = md * CostModel::mul_cost(16) * slp.length() +
                     64 * md * md;
        rows.push_back({"newton-d2-e2", ops.adds, ops.muls, bound,
                        "M(d)*M(d^4)*L + d^(2*gamma)*M(d)^2"});
    }
    for (const auto& r : rows) {
        if (g_json)
            emit(json{{"bound_formula", r.formula},
                      {"bound_value", r.bound},
                      {"measured_adds", r.adds},
                      {"measured_muls", r.muls},
                      {"pipeline", r.name}});
        else
            std::cout << r.name << ": measured_adds=" << r.adds
                      << " measured_muls=" << r.muls
                      << " bound=" << r.bound << " (" << r.formula << ")\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factor machinery for arithmetic circuits"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string format = "text";
    app.add_option("--format", format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}))
        ->each([](const std::string& s) { g_json = (s == "json-lines"); });

    RunConfig cfg;
    int exit_code = 0;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", cfg.file, "circuit file")->required();
    };

    auto* c_eval = app.add_subcommand("eval", "evaluate at a rational point");
    add_file(c_eval);
    c_eval->add_option("--point", cfg.point_text, "comma-separated rationals")
        ->required();
    c_eval->callback([&] { cmd_eval(cfg); });

    auto* c_expand = app.add_subcommand("expand", "expand to a sparse polynomial");
    add_file(c_expand);
    c_expand->add_option("--output", cfg.output);
    c_expand->callback([&] { cmd_expand(cfg); });

    auto* c_comp = app.add_subcommand("components",
                                      "bihomogeneous coefficient table");
    add_file(c_comp);
    c_comp->add_option("--degree", cfg.degree, "degree cap")->required();
    c_comp->callback([&] { cmd_components(cfg); });

    auto* c_padic = app.add_subcommand("padic", "p-adic coefficient table");
    add_file(c_padic);
    c_padic->add_option("--p", cfg.p_text, "monic base polynomial in Y")
        ->required();
    c_padic->add_option("--bound", cfg.bound);
    c_padic->callback([&] { cmd_padic(cfg); });

    auto* c_trail = app.add_subcommand("trailing",
                                       "trailing p-adic coefficient");
    add_file(c_trail);
    c_trail->add_option("--p", cfg.p_text, "monic base polynomial in Y")
        ->required();
    c_trail->add_flag("--circuit", cfg.print_circuit);
    c_trail->callback([&] { cmd_trailing(cfg); });

    auto* c_factor = app.add_subcommand("factor", "recover a multiple factor");
    add_file(c_factor);
    c_factor->add_option("--method", cfg.method)
        ->check(CLI::IsMember({"newton", "hensel"}));
    c_factor->add_option("--deg-g", cfg.deg_g, "degree of the factor")
        ->required();
    c_factor->add_option("--mult", cfg.mult, "multiplicity e")->required();
    c_factor->add_option("--point", cfg.point_text);
    c_factor->add_option("--u", cfg.u_text);
    c_factor->add_option("--v", cfg.v_text);
    c_factor->add_option("--g0", cfg.g0_text);
    c_factor->add_option("--h0", cfg.h0_text);
    c_factor->add_option("--mode", cfg.mode)
        ->check(CLI::IsMember({"approx", "exact"}));
    c_factor->callback([&] { cmd_factor(cfg); });

    auto* c_root = app.add_subcommand("root", "exact e-th root");
    add_file(c_root);
    c_root->add_option("--mult", cfg.mult, "root exponent")->required();
    c_root->add_option("--deg", cfg.deg_g, "degree of the root");
    c_root->callback([&] { cmd_root(cfg); });

    auto* c_degen = app.add_subcommand("degenerate",
                                       "initial-form degeneration witness");
    add_file(c_degen);
    c_degen->add_option("--w", cfg.w_text, "supporting normal");
    c_degen->add_option("--c", cfg.c, "face value")
        ->each([&](const std::string&) { cfg.c_given = true; });
    c_degen->add_flag("--list-faces", cfg.list_faces);
    c_degen->add_flag("--circuit", cfg.print_circuit);
    c_degen->callback([&] { cmd_degenerate(cfg); });

    auto* c_order = app.add_subcommand("order", "order and eps-zero value");
    add_file(c_order);
    c_order->add_option("--output", cfg.output);
    c_order->callback([&] { cmd_order(cfg); });

    auto* c_demo = app.add_subcommand("demo-example31",
                                      "reproduce the perturbed-iterate demo");
    c_demo->add_option("--truncate", cfg.truncate);
    c_demo->add_flag("--corrupt", cfg.corrupt)->group("");  // test hook
    c_demo->callback([&] { exit_code = cmd_demo_example31(cfg); });

    auto* c_bench = app.add_subcommand("bench",
                                       "measured counts vs bound formulas");
    c_bench->callback([&] { cmd_bench(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArityMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
