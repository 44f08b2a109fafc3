#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "circumnav/analysis.hpp"
#include "circumnav/controller.hpp"
#include "circumnav/sim.hpp"

using namespace circumnav;

namespace {

const DesignParams params = make_design_params(validate_radii(1.0, 0.7, 0.4), 0.6, 0.5, 0.05);

SimConfig reference_config(double t_final) {
    SimConfig c;
    c.x0 = 1.0;
    c.y0 = 0.8;
    c.theta0 = 38.0 * std::numbers::pi / 180.0;
    c.target = {0.0, 0.0};
    c.params = params;
    c.dt = 1e-3;
    c.t_final = t_final;
    c.record_stride = 10;
    return c;
}

}  // namespace

static void BM_Phi(benchmark::State& state) {
    double r = 1.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi(r, params));
        r = 0.71 + std::fmod(r, 2.0);
    }
}
BENCHMARK(BM_Phi);

static void BM_OmegaState(benchmark::State& state) {
    PolarState ps{1.28, 0.9, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(omega(ps, params));
        ps.theta = 0.5 + std::fmod(ps.theta, 1.5);
    }
}
BENCHMARK(BM_OmegaState);

static void BM_OmegaRangeOnly(benchmark::State& state) {
    double rdot = -0.21;
    for (auto _ : state) {
        benchmark::DoNotOptimize(omega_from_range(1.28, rdot, params));
        rdot = -std::abs(std::fmod(rdot + 0.017, 0.5));
    }
}
BENCHMARK(BM_OmegaRangeOnly);

static void BM_Linearize(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(linearize(params));
    }
}
BENCHMARK(BM_Linearize);

static void BM_SimulateSecond(benchmark::State& state) {
    // one simulated second at the reference step size (1000 RK4 steps)
    const SimConfig config = reference_config(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(config));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SimulateSecond)->Unit(benchmark::kMillisecond);

static void BM_FullReferenceRun(benchmark::State& state) {
    const SimConfig config = reference_config(120.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(config));
    }
}
BENCHMARK(BM_FullReferenceRun)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
