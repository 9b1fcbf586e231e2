#include <benchmark/benchmark.h>

#include <vector>

#include "hcflow/curvature.hpp"
#include "hcflow/curvature_operator.hpp"
#include "hcflow/flow.hpp"
#include "hcflow/radial.hpp"

using namespace hcflow;

static void BM_f_grad(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CurvatureSpec spec(n, 2, 1);
    std::vector<double> lam(static_cast<std::size_t>(n), 1.0);
    for (int i = 0; i < n; ++i) lam[static_cast<std::size_t>(i)] += 0.1 * i;
    for (auto _ : state) benchmark::DoNotOptimize(f_grad(spec, lam));
}
BENCHMARK(BM_f_grad)->Arg(3)->Arg(5)->Arg(8);

static void BM_F_matrix_eval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CurvatureSpec spec(n, 2, 1);
    SymMatrix a = SymMatrix::identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            a(i, j) = (i == j) ? 1.0 + 0.2 * i : 0.05 * (i + j);
            a(j, i) = a(i, j);
        }
    for (auto _ : state) benchmark::DoNotOptimize(F_matrix_eval(spec, a));
}
BENCHMARK(BM_F_matrix_eval)->Arg(3)->Arg(5)->Arg(8);

static void BM_flow_step(benchmark::State& state) {
    CurvatureSpec spec(1, 1, 0);
    DomainSpec dom(DomainMode::interval, 1, 1.0);
    FlowConfig config(spec, Grid(dom, static_cast<int>(state.range(0))), 0.5, 0.01);
    FlowState s = initial_surface(config, InitialSpec{InitialKind::subcritical_cap, 0.4, 0.0});
    for (auto _ : state) {
        auto [next, rep] = step(s, config);
        benchmark::DoNotOptimize(rep.dt);
    }
}
BENCHMARK(BM_flow_step)->Arg(201)->Arg(401);

static void BM_radial_convert(benchmark::State& state) {
    DomainSpec dom(DomainMode::rotational_disk, 3, 1.0);
    Grid grid(dom, 201);
    const Cap cap = Cap::with_boundary_value(0.5, 1.0, 0.01);
    std::vector<double> u(201);
    for (int j = 0; j < 201; ++j) u[static_cast<std::size_t>(j)] = cap.height(grid.coordinate(j));
    for (auto _ : state) benchmark::DoNotOptimize(radial_convert(grid, u, 100));
}
BENCHMARK(BM_radial_convert);

BENCHMARK_MAIN();
