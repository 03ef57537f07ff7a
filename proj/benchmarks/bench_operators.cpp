#include <benchmark/benchmark.h>

#include "pmp/operators.hpp"
#include "pmp/solver.hpp"

namespace {

pmp::ScalarField test_field() {
    return pmp::ScalarField::from_polynomial(pmp::DiskDomain(1.0),
                                             pmp::PolynomialField::monomial(2, 1) + pmp::PolynomialField::constant(1.0));
}

void BM_ApplyT(benchmark::State& state) {
    const pmp::ScalarField f = test_field();
    pmp::OperatorOptions options;
    options.area = {static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(pmp::apply_T(f, {0.3, 0.2}, options));
}
BENCHMARK(BM_ApplyT)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_ApplyMixed(benchmark::State& state) {
    const pmp::ScalarField f = test_field();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pmp::apply_mixed(f, {0.3, 0.2}, order, order));
}
BENCHMARK(BM_ApplyMixed)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Polydisc2(benchmark::State& state) {
    const pmp::ScalarField f(pmp::PolydiscDomain(2, 1.0),
                             [](std::span<const pmp::Complex> z) { return z[0] * std::conj(z[1]); });
    const pmp::Complex z[] = {{0.2, 0.1}, {-0.1, 0.3}};
    for (auto _ : state) benchmark::DoNotOptimize(pmp::apply_polydisc(f, z, {1, 1}, {1, 1}));
}
BENCHMARK(BM_Polydisc2)->Unit(benchmark::kMillisecond);

void BM_SolveGrid(benchmark::State& state) {
    pmp::SolutionSpec spec;
    spec.mu = 2;
    spec.nu = 2;
    spec.rhs = test_field();
    spec.g_list = {pmp::HolomorphicPolynomial({1.0}), pmp::HolomorphicPolynomial({0.0, 1.0})};
    spec.f_list = {pmp::HolomorphicPolynomial({0.5}), pmp::HolomorphicPolynomial::zero()};
    const pmp::Solution u = pmp::solve_pde(spec);
    const pmp::GridGeometry grid{pmp::GridKind::Cartesian, 8, 8};
    for (auto _ : state) benchmark::DoNotOptimize(u.evaluate(grid));
}
BENCHMARK(BM_SolveGrid)->Unit(benchmark::kMillisecond);

}  // namespace
