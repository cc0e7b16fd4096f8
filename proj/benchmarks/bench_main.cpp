#include <benchmark/benchmark.h>

#include "slpfactor/divfree.hpp"
#include "slpfactor/hensel.hpp"
#include "slpfactor/minpoly.hpp"
#include "slpfactor/padic.hpp"

using namespace slpfactor;

namespace {

Slp make_product(const char* gt, const char* ht, long e) {
    const std::vector<std::string> names = {"X", "Y"};
    MPoly<Rat> g = parse_mpoly(gt, names);
    MPoly<Rat> h = parse_mpoly(ht, names);
    return slp_from_mpoly(power(g, static_cast<unsigned long>(e)) * h, names);
}

void BM_expand(benchmark::State& state) {
    Slp f = make_product("Y^2 + Y + -1*X", "Y + 2", 2);
    for (auto _ : state) benchmark::DoNotOptimize(expand_rat(f));
}
BENCHMARK(BM_expand);

void BM_newton_implicit(benchmark::State& state) {
    MPoly<Rat> g = parse_mpoly("Y^2 + 2*Y + -1*X^2", {"X", "Y"});
    auto bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(newton_implicit(g, bound));
}
BENCHMARK(BM_newton_implicit)->Arg(8)->Arg(16)->Arg(32);

void BM_newton_perturbed(benchmark::State& state) {
    Slp f = make_product("Y^2 + 2*Y + -1*X^2", "1", 2);
    auto bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(newton_perturbed(f, bound));
}
BENCHMARK(BM_newton_perturbed)->Arg(4)->Arg(8);

void BM_hensel_factor(benchmark::State& state) {
    Slp f = make_product("Y^2 + X", "Y + 1", 2);
    RatPoly g0 = parse_unipoly("Y^2", "Y");
    RatPoly h0 = parse_unipoly("Y + 1", "Y");
    for (auto _ : state)
        benchmark::DoNotOptimize(hensel_factor(f, g0, h0, 2, 2));
}
BENCHMARK(BM_hensel_factor);

void BM_reconstruct_factor(benchmark::State& state) {
    Slp f = make_product("Y^2 + Y + -1*X", "Y + 2", 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            reconstruct_factor(f, 2, 2, {Rat(0), Rat(0)}, {Rat(0)}, Rat(1)));
}
BENCHMARK(BM_reconstruct_factor);

void BM_padic_extract(benchmark::State& state) {
    Slp f = make_product("Y^2 + X", "Y + 1", 3);
    RatPoly p = parse_unipoly("Y^2 + 1", "Y");
    for (auto _ : state)
        benchmark::DoNotOptimize(padic_extract<Rat>(f, p, 4));
}
BENCHMARK(BM_padic_extract);

void BM_eliminate_divisions(benchmark::State& state) {
    Slp geo = parse_slp("mode: rational\n"
                        "inputs X\n"
                        "const c1 = 1\n"
                        "v1 = sub c1 X\n"
                        "v2 = div c1 v1\n"
                        "output v2\n");
    auto bound = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate_divisions(geo, {Rat(0)}, bound));
}
BENCHMARK(BM_eliminate_divisions)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
