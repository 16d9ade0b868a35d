#include <benchmark/benchmark.h>

#include <cmath>

#include "tigre/elliptic.hpp"
#include "tigre/experiments.hpp"
#include "tigre/operators.hpp"
#include "tigre/stepper.hpp"

namespace {

using namespace tigre;

Model kh_model(int n) {
    Model m;
    m.kind = ModelKind::Tigre;
    m.reg.alpha = 1.0 / (static_cast<double>(n) * n);
    m.reg.beta = m.reg.alpha;
    return m;
}

void bench_weighted_div(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid g = make_grid(2, n, n);
    ScalarField w(g, 1.0), f(g);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            f(i, j) = std::sin(6.28318530717958647 * g.x(i)) * std::cos(6.28318530717958647 * g.y(j));
    StencilOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_div(w, f, opts));
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(bench_weighted_div)->Arg(128)->Arg(256);

void bench_elliptic_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Model m = kh_model(n);
    const Grid g = make_grid(2, n, n);
    const ConservedState st = init_kh(g, m);
    const VectorField u = velocity(st);
    const EllipticRhs rhs = build_rhs_tigre(u, st.ez, m.reg);
    for (auto _ : state) {
        Potentials pots(g);
        SolveStats stats = solve_potentials(st.rho, st.ez, rhs, m.reg, pots);
        benchmark::DoNotOptimize(stats);
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(bench_elliptic_solve)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void bench_lw_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Model m = kh_model(n);
    const Grid g = make_grid(2, n, n);
    const ConservedState st = init_kh(g, m);
    const ScalarField sigma(g), chi(g);
    const double dt = 0.4 * g.dx / max_signal_speed(m, st);
    double src[2];
    for (auto _ : state)
        benchmark::DoNotOptimize(lw_step(m, st, sigma, chi, dt, src));
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(bench_lw_step)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
