#include <benchmark/benchmark.h>

#include "pmp/kernels.hpp"
#include "pmp/quadrature.hpp"

namespace {

void BM_C3(benchmark::State& state) {
    const int mu = static_cast<int>(state.range(0));
    const int nu = static_cast<int>(state.range(1));
    const pmp::Complex a{0.3, 0.1};
    const pmp::Complex b{-0.2, 0.4};
    for (auto _ : state) benchmark::DoNotOptimize(pmp::c3(a, b, mu, nu, 1.0));
}
BENCHMARK(BM_C3)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Args({6, 6});

void BM_C2(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pmp::c2({0.3, 0.1}, {-0.2, 0.4}, l, l, 1.0));
}
BENCHMARK(BM_C2)->Arg(1)->Arg(4)->Arg(8);

void BM_AreaRule(benchmark::State& state) {
    const pmp::Resolution res{static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0))};
    const pmp::DiskDomain disk(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(pmp::build_area_rule(disk, {0.4, -0.3}, res));
    state.SetItemsProcessed(state.iterations() * res.n_radial * res.n_angular);
}
BENCHMARK(BM_AreaRule)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
