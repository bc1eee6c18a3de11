#include <benchmark/benchmark.h>

#include "kemetric/certify.hpp"
#include "kemetric/metric.hpp"
#include "kemetric/sweep.hpp"

using namespace kemetric;

namespace
{

PotentialSpec veronese()
{
    return PotentialSpec(2, {{MultiIndex{2, 0}, CoefPoly(Rational(1L, 4L))},
                             {MultiIndex{1, 1}, CoefPoly(Rational(1L, 2L))},
                             {MultiIndex{0, 2}, CoefPoly(Rational(1L, 4L))}});
}

void BM_SeriesMul(benchmark::State& state)
{
    const auto D = static_cast<unsigned>(state.range(0));
    const Series p = build_potential(veronese(), D);
    const Series f = log1p(p - Series::constant(2, D, CoefPoly(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_SeriesMul)->Arg(4)->Arg(8)->Arg(12);

void BM_DetMetric(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Series p = build_potential(PotentialSpec(n, {}), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(det_metric(metric_in_x(p)));
}
BENCHMARK(BM_DetMetric)->DenseRange(2, 5);

void BM_CertifyVeronese(benchmark::State& state)
{
    const PotentialSpec spec = veronese();
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_exact({spec, Rational(3)}));
}
BENCHMARK(BM_CertifyVeronese);

void BM_SweepDimensionTwo(benchmark::State& state)
{
    SweepOptions o;
    o.dim_lo = 2;
    o.dim_hi = 2;
    o.k_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(o));
}
BENCHMARK(BM_SweepDimensionTwo)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
