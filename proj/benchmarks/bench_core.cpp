#include <benchmark/benchmark.h>

#include "kforms/cap.hpp"
#include "kforms/chern.hpp"
#include "kforms/ktheory.hpp"
#include "kforms/randomgen.hpp"
#include "kforms/transgression.hpp"

using namespace kforms;

namespace {

Sampler sampler(std::uint64_t seed) {
    return Sampler(seed, Profile::by_name("default"));
}

void bm_wedge(benchmark::State& state) {
    Sampler s = sampler(1);
    Form a = s.arbitrary_form(false), b = s.arbitrary_form(false);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_wedge);

void bm_ext_d(benchmark::State& state) {
    Sampler s = sampler(2);
    Form a = s.arbitrary_form(false);
    for (auto _ : state)
        benchmark::DoNotOptimize(ext_d(a));
}
BENCHMARK(bm_ext_d);

void bm_cap_add(benchmark::State& state) {
    Sampler s = sampler(3);
    Form a = s.odd_form(), b = s.odd_form();
    for (auto _ : state)
        benchmark::DoNotOptimize(cap_add(a, b));
}
BENCHMARK(bm_cap_add);

void bm_total_chern(benchmark::State& state) {
    Sampler s = sampler(4);
    FormMatrix f = curvature(s.connection());
    InvPoly ctot = InvPoly::total_chern();
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_poly(ctot, f));
}
BENCHMARK(bm_total_chern);

void bm_cs_multiplicative(benchmark::State& state) {
    Sampler s = sampler(5);
    Connection c0 = s.connection(), c1 = s.connection();
    InvPoly ctot = InvPoly::total_chern();
    for (auto _ : state)
        benchmark::DoNotOptimize(cs_multiplicative(ctot, c0, c1));
}
BENCHMARK(bm_cs_multiplicative);

void bm_normalize_mult(benchmark::State& state) {
    Sampler s = sampler(6);
    Triple a = s.triple(), b = s.triple();
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize_mult({{1, a}, {-1, b}}));
}
BENCHMARK(bm_normalize_mult);

} // namespace

BENCHMARK_MAIN();
