#include <benchmark/benchmark.h>

#include <cmath>

#include "beansub/bean.hpp"
#include "beansub/boundary.hpp"
#include "beansub/lemma.hpp"
#include "beansub/subordination.hpp"
#include "beansub/theorem.hpp"

using namespace beansub;

static void BM_BoundaryPoint(benchmark::State& state) {
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(boundary_point(theta));
        theta += 1e-3;
    }
}
BENCHMARK(BM_BoundaryPoint);

static void BM_BeanMargin(benchmark::State& state) {
    const auto bean = DomainPredicate::bean();
    Complex w{1.1, 0.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bean.margin(w));
        w += Complex{1e-9, 0.0};
    }
}
BENCHMARK(BM_BeanMargin);

static void BM_FindExtremumOmega(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_extremum(Profile::omega(), 0.0, M_PI, Extremum::Max, 1e-10));
    }
}
BENCHMARK(BM_FindExtremumOmega);

static void BM_VerifyLemma(benchmark::State& state) {
    const auto spec = LemmaSpec::bean();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_radius_lemma(spec, spec.claimed_radius(), static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_VerifyLemma)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

static void BM_AdmissibilityScan(benchmark::State& state) {
    const auto spec = TheoremSpec::at_threshold(TheoremId::BeanSecondOrder, TheoremParams{});
    ScanOptions opts;
    opts.theta_grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(admissibility_scan(spec, opts));
    }
}
BENCHMARK(BM_AdmissibilityScan)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_CheckImplication(benchmark::State& state) {
    const auto spec = TheoremSpec::at_threshold(TheoremId::BeanPower, TheoremParams{});
    const auto p = AnalyticFunction::bean_composed({0.0, 0.5, 0.3});
    const double radii[] = {0.5, 0.9, 0.99};
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_implication(spec, p, radii, 256));
    }
}
BENCHMARK(BM_CheckImplication)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
