#include <benchmark/benchmark.h>

#include "sta/hankel.hpp"
#include "sta/init.hpp"
#include "sta/objective.hpp"
#include "sta/poly.hpp"
#include "sta/solver.hpp"

namespace {

using namespace sta;

Decomposition random_point(const HomPoly& P, int r, std::uint64_t seed) {
    auto [p0, report] = random_init(P, r, seed);
    return p0;
}

void bm_derivative_bundle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int r = static_cast<int>(state.range(1));
    HomPoly P = random_gaussian_poly(n, 4, FieldMode::Complex, 7);
    Decomposition p = random_point(P, r, 11);
    for (auto _ : state) {
        DerivativeBundle b = bundle(p, P);
        benchmark::DoNotOptimize(b.H_proj.data());
    }
}
BENCHMARK(bm_derivative_bundle)->Args({6, 2})->Args({10, 3})->Args({10, 6});

void bm_hankel_theta(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    HomPoly P = random_gaussian_poly(n, 4, FieldMode::Complex, 7);
    for (auto _ : state) {
        ThetaResult t = theta_full(P);
        benchmark::DoNotOptimize(t.u.data());
    }
}
BENCHMARK(bm_hankel_theta)->Arg(6)->Arg(10)->Arg(14);

void bm_dogleg(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int r = static_cast<int>(state.range(1));
    HomPoly P = random_gaussian_poly(n, 4, FieldMode::Complex, 7);
    Decomposition p = random_point(P, r, 11);
    DerivativeBundle b = bundle(p, P);
    for (auto _ : state) {
        DoglegStep s = dogleg(b.G_proj, b.H_proj, 0.1);
        benchmark::DoNotOptimize(s.step.data());
    }
}
BENCHMARK(bm_dogleg)->Args({6, 2})->Args({10, 3})->Args({10, 6});

void bm_retract_product(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int r = static_cast<int>(state.range(1));
    HomPoly P = random_gaussian_poly(n, 4, FieldMode::Complex, 7);
    Decomposition p = random_point(P, r, 11);
    DerivativeBundle b = bundle(p, P);
    Eigen::VectorXd step = 1e-3 * Eigen::VectorXd::Ones(b.G_proj.size());
    for (auto _ : state) {
        Decomposition q = retract_product(p, step, b.basis, P.d());
        benchmark::DoNotOptimize(q.V.data());
    }
}
BENCHMARK(bm_retract_product)->Args({6, 2})->Args({10, 3});

}  // namespace

BENCHMARK_MAIN();
