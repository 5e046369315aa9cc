#include <benchmark/benchmark.h>

#include "avgsearch/kernel.hpp"
#include "avgsearch/pointset.hpp"
#include "avgsearch/search.hpp"

using namespace avgsearch;

static void BM_AveragingSearch(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    auto m = static_cast<std::size_t>(state.range(1));
    SearchConfig config;
    config.variant = SearchVariant::Averaging;
    config.seed = 1;
    for (auto _ : state) {
        auto result = averaging_search(kernel, m, config);
        benchmark::DoNotOptimize(result.points.coords().data());
    }
}
BENCHMARK(BM_AveragingSearch)->Args({1, 64})->Args({1, 256})->Args({2, 64})->Args({3, 32})
    ->Unit(benchmark::kMillisecond);

static void BM_GreedySearch(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    auto m = static_cast<std::size_t>(state.range(1));
    SearchConfig config;
    config.variant = SearchVariant::Greedy;
    for (auto _ : state) {
        auto result = greedy_averaging_search(kernel, m, config);
        benchmark::DoNotOptimize(result.points.coords().data());
    }
}
BENCHMARK(BM_GreedySearch)->Args({1, 64})->Args({1, 256})->Args({2, 64})->Args({3, 32})
    ->Unit(benchmark::kMillisecond);

static void BM_GreedyStep(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    auto m = static_cast<std::size_t>(state.range(0));
    PointSet prefix = random_points(1, m, 7);
    SearchConfig config;
    config.variant = SearchVariant::Greedy;
    for (auto _ : state) {
        auto outcome = greedy_step(kernel, prefix, config);
        benchmark::DoNotOptimize(outcome.objective);
    }
}
BENCHMARK(BM_GreedyStep)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_KernelCentered(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    PointSet set = random_points(kernel.dim(), 1024, 3);
    std::size_t j = 0;
    for (auto _ : state) {
        double v = kernel.centered(set.point(j));
        benchmark::DoNotOptimize(v);
        j = (j + 1) % set.size();
    }
}
BENCHMARK(BM_KernelCentered)->Arg(1)->Arg(2)->Arg(3);

static void BM_KernelCenteredSpectrum(benchmark::State& state) {
    auto kernel = FourierKernel::korobov(static_cast<int>(state.range(0)), 2.0, 8);
    PointSet set = random_points(kernel.dim(), 1024, 3);
    std::size_t j = 0;
    for (auto _ : state) {
        double v = kernel.centered_from_spectrum(set.point(j));
        benchmark::DoNotOptimize(v);
        j = (j + 1) % set.size();
    }
}
BENCHMARK(BM_KernelCenteredSpectrum)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
