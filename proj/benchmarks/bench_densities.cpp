#include <benchmark/benchmark.h>

#include "kernelhom/densities.hpp"
#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"
#include "kernelhom/rng.hpp"
#include "kernelhom/symfun.hpp"
#include "kernelhom/verify.hpp"

namespace {

using kernelhom::Graph;
using kernelhom::StepKernel;

void path_fast(benchmark::State& state) {
    const StepKernel u = kernelhom::random_kernel(
        static_cast<int>(state.range(1)), 1.0, 12345);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::t_path_fast(m, u));
    }
}
BENCHMARK(path_fast)->Args({8, 4})->Args({16, 4})->Args({16, 16});

void path_oracle(benchmark::State& state) {
    const StepKernel u = kernelhom::random_kernel(3, 1.0, 12345);
    const Graph h = Graph::path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::t_hom_oracle(h, u));
    }
}
BENCHMARK(path_oracle)->Arg(4)->Arg(6)->Arg(8);

void cycle_fast(benchmark::State& state) {
    const StepKernel u = kernelhom::random_kernel(
        static_cast<int>(state.range(1)), 1.0, 999);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::t_cycle_fast(m, u));
    }
}
BENCHMARK(cycle_fast)->Args({6, 4})->Args({12, 8});

void qmd_subgraph_route(benchmark::State& state) {
    const StepKernel u = kernelhom::random_kernel(3, 1.0, 7);
    const int m = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::qmd_via_subgraphs(m, d, u));
    }
}
BENCHMARK(qmd_subgraph_route)->Args({10, 2})->Args({12, 4})->Args({16, 6});

void qmd_moment_route(benchmark::State& state) {
    const StepKernel u = kernelhom::random_kernel(3, 1.0, 7);
    const int m = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::qmd_via_moments(m, d, u));
    }
}
BENCHMARK(qmd_moment_route)->Args({10, 2})->Args({12, 4})->Args({16, 6});

void h_complete_eval(benchmark::State& state) {
    std::vector<double> xs(static_cast<std::size_t>(state.range(1)));
    kernelhom::Rng rng(42);
    for (auto& x : xs) x = rng.uniform(-1.0, 1.0);
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelhom::h_complete(d, xs));
    }
}
BENCHMARK(h_complete_eval)->Args({8, 8})->Args({12, 16})->Args({20, 32});

}  // namespace

BENCHMARK_MAIN();
