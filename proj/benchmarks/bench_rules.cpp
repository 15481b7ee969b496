#include <cmath>

#include <benchmark/benchmark.h>

#include "mopquad/mopquad.hpp"

using namespace mopquad;

namespace {

MopSpec spec_for(int cls, int n) { return validate_spec(cls, reference_params(cls), n); }

void BM_GaussMop(benchmark::State& state)
{
    const MopSpec spec = spec_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        QuadratureRule r = gauss_mop(spec);
        benchmark::DoNotOptimize(r.nodes.data());
    }
    state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_GaussMop)
    ->ArgsProduct({{2, 6, 9}, {100, 200, 400, 800}})
    ->Unit(benchmark::kMillisecond);

void BM_InitialGuesses(benchmark::State& state)
{
    const BalancedSystem s = balance(class_mop(spec_for(2, static_cast<int>(state.range(0)))).h);
    for (auto _ : state) {
        auto g = initial_guesses(s);
        benchmark::DoNotOptimize(g.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InitialGuesses)->RangeMultiplier(2)->Range(100, 800)->Complexity(benchmark::oNSquared);

void BM_NewtonStep(benchmark::State& state)
{
    const BalancedSystem s = balance(class_mop(spec_for(2, static_cast<int>(state.range(0)))).h);
    for (auto _ : state) {
        NewtonStep st = newton_step(s, 1.5);
        benchmark::DoNotOptimize(st.p.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NewtonStep)->RangeMultiplier(2)->Range(100, 800)->Complexity(benchmark::oN);

void BM_ApplyRule(benchmark::State& state)
{
    const QuadratureRule r = gauss_mop(spec_for(2, 100));
    for (auto _ : state) {
        auto v = apply_rule(r, [](double x) { return x * std::exp(-x); });
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ApplyRule);

} // namespace

BENCHMARK_MAIN();
