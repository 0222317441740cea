#include <benchmark/benchmark.h>

#include "polariton/propagator.hpp"
#include "polariton/ramsey.hpp"
#include "polariton/storage.hpp"

using namespace polariton;

static ScalarField2D beam(std::size_t n) {
    ModeSpec s;
    s.w0 = 1e-3;
    return make_mode(s, GridSpec::square(n, 20e-3 / double(n)));
}

static void BM_Propagate(benchmark::State& state) {
    const auto in = beam(static_cast<std::size_t>(state.range(0)));
    PropagationPlan p;
    p.L = 0.05;
    p.q = 7.9e6;
    p.Delta = -1000.0;
    p.resonance = DarkResonance::ideal(100.0, 5e4, 600.0, 1e-3);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(in, p).field.data().data());
}
BENCHMARK(BM_Propagate)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_EvolveStored(benchmark::State& state) {
    const auto in = beam(256);
    for (auto _ : state) benchmark::DoNotOptimize(evolve_stored(in, 1e-3, 1e-3, 100.0).data().data());
}
BENCHMARK(BM_EvolveStored)->Unit(benchmark::kMillisecond);

static void BM_RamseyClosedForm(benchmark::State& state) {
    RamseyGeometry g;
    g.a = 1e-4;
    g.b = 3e-4;
    g.D = 1e-3;
    g.gamma0 = 600.0;
    g.gammaP = 1.2e4;
    double d = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ramsey_correction(d, g));
        d += 1.0;
    }
}
BENCHMARK(BM_RamseyClosedForm);

static void BM_RamseyMonteCarlo(benchmark::State& state) {
    RamseyGeometry g;
    g.a = 1e-4;
    g.D = 1e-3;
    g.gamma0 = 2 * 3.141592653589793 * 100.0;
    g.gammaP = 20 * g.gamma0;
    MonteCarloSpec spec;
    spec.walkers = static_cast<std::size_t>(state.range(0));
    spec.dt = 1e-2 * g.a * g.a / g.D;
    const std::vector<double> det{-2e3, 0.0, 2e3};
    for (auto _ : state) benchmark::DoNotOptimize(simulate_repeated_interaction(g, det, spec).dark.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RamseyMonteCarlo)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
