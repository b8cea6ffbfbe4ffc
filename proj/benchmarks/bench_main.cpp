#include <benchmark/benchmark.h>

#include <cmath>

#include "fracgrowth/fode_solver.hpp"
#include "fracgrowth/frac_ops.hpp"
#include "fracgrowth/growth_model.hpp"
#include "fracgrowth/special_fn.hpp"

namespace {

using namespace fracgrowth;

// Arguments: alpha * 100, z.
void BM_MittagLeffler(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 100.0;
    const double z = static_cast<double>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mittag_leffler(alpha, 1.0, z));
    }
    state.SetLabel(std::string(to_string(select_branch({alpha, 1.0, z}))));
}
BENCHMARK(BM_MittagLeffler)
    ->Args({90, 2})
    ->Args({90, 25})
    ->Args({90, -25})
    ->Args({90, -100})
    ->Args({150, -40})
    ->Args({40, 5})
    ->Args({40, -5});

void BM_RlIntegral(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = SampledFunction::sample(0.0, 2.0 / static_cast<double>(n - 1), n, [](double t) { return std::sin(t); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(rl_integral(f, FracOrder(0.7)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RlIntegral)->RangeMultiplier(2)->Range(512, 4096)->Complexity(benchmark::oNSquared);

void BM_CaputoDerivative(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double alpha = static_cast<double>(state.range(1)) / 10.0;
    const auto f = SampledFunction::sample(0.0, 2.0 / static_cast<double>(n - 1), n, [](double t) { return std::sin(t); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(caputo_derivative(f, FracOrder(alpha)));
    }
}
BENCHMARK(BM_CaputoDerivative)->Args({2001, 3})->Args({2001, 15});

void BM_SolveLinear(benchmark::State& state) {
    const auto p = params_from_margin(0.2, 2.0, 20.0, 30.0, 0.9, 12.0);
    const auto eq = to_fode(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear(eq, 10.0, static_cast<std::size_t>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveLinear)->RangeMultiplier(2)->Range(500, 4000)->Complexity(benchmark::oNSquared);

void BM_MemorySolution(benchmark::State& state) {
    const auto p = params_from_margin(0.2, 2.0, 20.0, 30.0, 0.9, 12.0);
    const auto grid = UniformGrid::over(20.0, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(memory_solution(p, grid));
    }
}
BENCHMARK(BM_MemorySolution);

}  // namespace

BENCHMARK_MAIN();
