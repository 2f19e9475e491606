#include <benchmark/benchmark.h>

#include "kepler/jack.hpp"
#include "kepler/kernels.hpp"
#include "kepler/series.hpp"

using namespace kepler;

static void BM_spherical_phi_cold(benchmark::State& state) {
    const int weight = static_cast<int>(state.range(0));
    DiagonalPoint t = DiagonalPoint::free({1.1, 0.6, 0.3});
    for (auto _ : state) {
        jack_cache_clear();
        double acc = 0.0;
        for (const Partition& mu : partitions_of_weight(weight, 3))
            acc += spherical_phi(mu, t, 2.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_spherical_phi_cold)->Arg(8)->Arg(16)->Arg(24);

static void BM_spherical_phi_warm(benchmark::State& state) {
    const int weight = static_cast<int>(state.range(0));
    DiagonalPoint t = DiagonalPoint::free({1.1, 0.6, 0.3});
    jack_cache_clear();
    for (const Partition& mu : partitions_of_weight(weight, 3))
        spherical_phi(mu, t, 2.0);
    for (auto _ : state) {
        double acc = 0.0;
        for (const Partition& mu : partitions_of_weight(weight, 3))
            acc += spherical_phi(mu, t, 2.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_spherical_phi_warm)->Arg(8)->Arg(16)->Arg(24);

static void BM_hyper_1f1_rank2(benchmark::State& state) {
    JordanType jt(2, 1.0, 0.0);
    DiagonalPoint t = DiagonalPoint::cone({double(state.range(0)), 0.6 * state.range(0)});
    SeriesControl ctl(900, 1e-300, 1e-15);
    for (auto _ : state) {
        auto r = hyper_pFq({1.7}, {2.45}, t, jt, ctl);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_hyper_1f1_rank2)->Arg(10)->Arg(40)->Arg(80);

static void BM_kernel_diag_bounded(benchmark::State& state) {
    JordanType spin5(2, 3.0, 0.0);
    KernelSpec spec = KernelSpec::bounded(spin5, 1, double(state.range(0)));
    DiagonalPoint t = DiagonalPoint::bounded({0.3});
    SeriesControl ctl(1600, 1e-280, 1e-14);
    for (auto _ : state) {
        auto r = kernel_diag(spec, t, ctl);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_kernel_diag_bounded)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
