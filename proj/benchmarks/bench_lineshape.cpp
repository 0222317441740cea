#include <benchmark/benchmark.h>

#include "polariton/faddeeva.hpp"
#include "polariton/kinetics.hpp"
#include "polariton/lineshape.hpp"

using namespace polariton;

static MediumParams medium() {
    MediumParams m;
    m.v_T = 1.0;
    m.Gamma = 0.3;
    m.gamma_c = 0.5;
    m.gamma0 = 0.01;
    m.g = 1.0;
    return m;
}

static void BM_Faddeeva(benchmark::State& state) {
    cplx z(0.1, 0.3), acc = 0.0;
    for (auto _ : state) {
        acc += faddeeva_w(z);
        z += cplx(1e-6, 0.0);
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Faddeeva);

static void BM_WeakOnePhoton(benchmark::State& state) {
    const auto m = medium();
    const auto geom = BeamGeometry::degenerate(1.0, 0.0);
    double dp = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_one_photon_weak(dp, m, geom));
        dp += 1e-3;
    }
}
BENCHMARK(BM_WeakOnePhoton);

static void BM_FullStrong(benchmark::State& state) {
    const auto m = medium();
    DriveParams drive;
    drive.Omega_c = 0.2;
    const auto geom = BeamGeometry::degenerate(1.0, 0.05);
    for (auto _ : state) benchmark::DoNotOptimize(chi_full_strong(0.1, 0.01, m, geom, drive));
}
BENCHMARK(BM_FullStrong);

static void BM_KineticOracle(benchmark::State& state) {
    const auto m = medium();
    DriveParams drive;
    drive.Omega_c = 0.2;
    const auto geom = BeamGeometry::collinear(1.0, 0.95);
    const auto grid = VelocityGrid::make(1, static_cast<int>(state.range(0)), m.v_T);
    for (auto _ : state) benchmark::DoNotOptimize(solve_velocity_resolved(0.1, 0.01, m, geom, drive, grid));
}
BENCHMARK(BM_KineticOracle)->Arg(201)->Arg(401);

BENCHMARK_MAIN();
