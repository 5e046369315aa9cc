#include <benchmark/benchmark.h>

#include "avgsearch/analysis.hpp"
#include "avgsearch/kernel.hpp"
#include "avgsearch/pointset.hpp"

using namespace avgsearch;

static void BM_PairEnergyDirect(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    PointSet set = random_points(kernel.dim(), static_cast<std::size_t>(state.range(1)), 5);
    for (auto _ : state) {
        double e = pair_energy_direct(kernel, set);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_PairEnergyDirect)->Args({1, 64})->Args({1, 256})->Args({2, 128})->Args({3, 64})
    ->Unit(benchmark::kMillisecond);

static void BM_PairEnergySpectral(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    PointSet set = random_points(kernel.dim(), static_cast<std::size_t>(state.range(1)), 5);
    for (auto _ : state) {
        double e = pair_energy_spectral(kernel, set);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_PairEnergySpectral)->Args({1, 64})->Args({1, 256})->Args({2, 128})->Args({3, 64})
    ->Unit(benchmark::kMillisecond);

static void BM_WceScan(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    PointSet set = random_points(kernel.dim(), static_cast<std::size_t>(state.range(1)), 5);
    int grid = default_analysis_grid(kernel.dim());
    for (auto _ : state) {
        auto wce = wce_l1_class(kernel, set, grid);
        benchmark::DoNotOptimize(wce.value);
    }
}
BENCHMARK(BM_WceScan)->Args({1, 64})->Args({2, 64})->Args({3, 32})->Unit(benchmark::kMillisecond);

static void BM_ExpSum(benchmark::State& state) {
    PointSet set = random_points(2, static_cast<std::size_t>(state.range(0)), 5);
    FrequencyIndex k{3, -5};
    for (auto _ : state) {
        auto q = exp_sum(set, k);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_ExpSum)->Arg(64)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();
