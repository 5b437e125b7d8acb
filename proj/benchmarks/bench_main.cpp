#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "fracgreen/dense_linear.hpp"
#include "fracgreen/galerkin.hpp"
#include "fracgreen/interpolation.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/quadrature.hpp"

using namespace fracgreen;

static void BM_KernelEval(benchmark::State& state) {
    const KernelSpec spec = KernelSpec::rl_left(1.5);
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spec(x, 0.37));
        x = x < 0.9 ? x + 1e-3 : 0.1;
    }
}
BENCHMARK(BM_KernelEval);

static void BM_GaussLegendre(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(64);

static void BM_GradedIntegral(benchmark::State& state) {
    const CompositeGauss quad{QuadratureRule{}};
    for (auto _ : state) benchmark::DoNotOptimize(quad.integrate([](double x) { return 1.0 / std::sqrt(x); }));
}
BENCHMARK(BM_GradedIntegral);

static void BM_LuSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = kernel_matrix(KernelSpec::rl_left(1.5), chebyshev_nodes(n));
    std::vector<double> b(n, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(lu_solve(a, b));
}
BENCHMARK(BM_LuSolve)->Arg(80)->Arg(320)->Unit(benchmark::kMillisecond);

static void BM_AssembleMass(benchmark::State& state) {
    const NodeSet nodes = chebyshev_nodes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            assemble_mass(KernelSpec::rl_left(1.8), nodes, QuadratureRule{}, TestFunctions::Primal));
    }
}
BENCHMARK(BM_AssembleMass)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
