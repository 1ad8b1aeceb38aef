#include <benchmark/benchmark.h>

#include "dok/convolution.hpp"
#include "dok/kernel.hpp"
#include "dok/params.hpp"
#include "dok/spectral.hpp"
#include "dok/step_size.hpp"

using namespace dok;

namespace {

void BM_compute_params(benchmark::State& state) {
    const StepSize h(0.1);
    for (auto _ : state) benchmark::DoNotOptimize(compute_params(h));
}
BENCHMARK(BM_compute_params);

void BM_compute_params_series_branch(benchmark::State& state) {
    const StepSize h(0.01);  // both cores below the crossover
    for (auto _ : state) benchmark::DoNotOptimize(compute_params(h));
}
BENCHMARK(BM_compute_params_series_branch);

void BM_eval_D(benchmark::State& state) {
    const OperatorParams p = compute_params(StepSize(0.1));
    std::int64_t b = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_D(p, b % 40));
        ++b;
    }
}
BENCHMARK(BM_eval_D);

void BM_sample_D(benchmark::State& state) {
    const OperatorParams p = compute_params(StepSize(0.1));
    for (auto _ : state) {
        LatticeFunction w = sample_D(p, state.range(0));
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_sample_D)->Arg(16)->Arg(128)->Arg(1024);

void BM_convolve_at(benchmark::State& state) {
    const StepSize h(0.1);
    const OperatorParams p = compute_params(h);
    const LatticeFunction w = sample_D(p, 8);
    const LatticeEvaluator g{[h](std::int64_t b) { return eval_G_discrete(h, b); }, 1};
    for (auto _ : state) benchmark::DoNotOptimize(convolve_at(w, g, 0, 1e-8));
}
BENCHMARK(BM_convolve_at);

void BM_convolve_window(benchmark::State& state) {
    const StepSize h(0.1);
    const OperatorParams p = compute_params(h);
    const LatticeFunction w = sample_D(p, 8);
    const LatticeEvaluator g{[h](std::int64_t b) { return eval_G_discrete(h, b); }, 1};
    for (auto _ : state) {
        WindowResult out = convolve_window(w, g, -20, 20, 1e-8);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_convolve_window);

void BM_symbol_closed(benchmark::State& state) {
    const OperatorParams p = compute_params(StepSize(0.1));
    double f = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(symbol_closed(p, f));
        f += 0.0123;
    }
}
BENCHMARK(BM_symbol_closed);

void BM_symbol_series(benchmark::State& state) {
    const StepSize h(0.1);
    for (auto _ : state) benchmark::DoNotOptimize(symbol_series(h, 0.37, state.range(0)));
}
BENCHMARK(BM_symbol_series)->Arg(1000)->Arg(100000);

void BM_fourier_coefficient(benchmark::State& state) {
    const OperatorParams p = compute_params(StepSize(0.1));
    for (auto _ : state) benchmark::DoNotOptimize(fourier_coefficient(p, 3, 4096));
}
BENCHMARK(BM_fourier_coefficient);

}  // namespace

BENCHMARK_MAIN();
