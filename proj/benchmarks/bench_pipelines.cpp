#include <benchmark/benchmark.h>

#include "dpi/bessel.hpp"
#include "dpi/cfrac.hpp"
#include "dpi/closed_form.hpp"
#include "dpi/fixed_point.hpp"
#include "dpi/wronskian.hpp"

using namespace dpi;

static void BM_SolvePositive(benchmark::State& state) {
    HPReal eps = HPReal::parse("0.1", 50);
    for (auto _ : state) {
        auto r = solve_positive(eps, static_cast<int>(state.range(0)), 1e-12);
        benchmark::DoNotOptimize(r.sup_width);
    }
}
BENCHMARK(BM_SolvePositive)->Arg(20)->Arg(60);

static void BM_BesselI(benchmark::State& state) {
    HPReal x(2.5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = bessel_i(BigRat(1, 6), x);
        benchmark::DoNotOptimize(v.to_double());
    }
}
BENCHMARK(BM_BesselI)->Arg(50)->Arg(100)->Arg(200);

static void BM_EvalCfrac(benchmark::State& state) {
    HPReal eps = HPReal::parse("0.5", 50);
    for (auto _ : state) {
        auto v = eval_cfrac(eps, 1e-30);
        benchmark::DoNotOptimize(v.terms);
    }
}
BENCHMARK(BM_EvalCfrac);

static void BM_BoundTableExact(benchmark::State& state) {
    BigRat eps(1, 2);
    for (auto _ : state) {
        auto t = bound_table_exact(eps, static_cast<int>(state.range(0)), 20);
        benchmark::DoNotOptimize(t.b.back().front().get_d());
    }
}
BENCHMARK(BM_BoundTableExact)->Arg(6)->Arg(12);

static void BM_WronskianB(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    HPReal t(BigRat(10, 3), 50);
    auto c = BesselCoeffs::positive_branch(50);
    for (auto _ : state) {
        auto d = wronskian_B(-n, n, BigRat(5, 6), t, c, 50);
        benchmark::DoNotOptimize(d.hp.to_double());
    }
}
BENCHMARK(BM_WronskianB)->Arg(2)->Arg(4)->Arg(6);

static void BM_VClosed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    HPReal t(BigRat(10, 3), 50);
    auto c = BesselCoeffs::positive_branch(50);
    for (auto _ : state) {
        auto v = v_closed(n, t, c, 50);
        benchmark::DoNotOptimize(v.to_double());
    }
}
BENCHMARK(BM_VClosed)->Arg(5)->Arg(11)->Arg(20);

BENCHMARK_MAIN();
