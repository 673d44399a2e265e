#include <benchmark/benchmark.h>

#include <meixner/cliquet.hpp>
#include <meixner/complex_gamma.hpp>
#include <meixner/monte_carlo.hpp>

using namespace meixner;

namespace {

const MeixnerParams canonical_params{0.3, -0.5, 0.5, 0.0};
const GeometricMeixnerModel canonical_model{100.0, 0.03, canonical_params};
const CliquetContract canonical_contract{1000.0, 0.02, 0.08, 12, 1.0};

void BM_LogGammaComplex(benchmark::State& state) {
    complex z{0.0416, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(z));
        z += complex(0.0, 1e-9);
    }
}
BENCHMARK(BM_LogGammaComplex);

void BM_Pdf(benchmark::State& state) {
    const PeriodLaw law = period_law(canonical_model, 1.0 / 12.0);
    double x = -0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdf(law.params, 1.0, x));
        x += 1e-7;
    }
}
BENCHMARK(BM_Pdf);

void BM_Cdf(benchmark::State& state) {
    const PeriodLaw law = period_law(canonical_model, 1.0 / 12.0);
    for (auto _ : state) benchmark::DoNotOptimize(cdf(law.params, 1.0, 0.01));
}
BENCHMARK(BM_Cdf);

void BM_CfZ1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cf_z1(canonical_model, canonical_contract, 2.0));
}
BENCHMARK(BM_CfZ1);

void BM_ExpectedZ1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_z1(canonical_model, canonical_contract));
}
BENCHMARK(BM_ExpectedZ1);

void BM_PriceDistribution(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            price_distribution_method(canonical_model, canonical_contract, pricing_quad_config()));
}
BENCHMARK(BM_PriceDistribution)->Unit(benchmark::kMillisecond);

void BM_SamplerBuild(benchmark::State& state) {
    const PeriodLaw law = period_law(canonical_model, 1.0 / 12.0);
    for (auto _ : state) benchmark::DoNotOptimize(build_sampler(law, 4096));
}
BENCHMARK(BM_SamplerBuild)->Unit(benchmark::kMillisecond);

void BM_SampleDraws(benchmark::State& state) {
    const PeriodLaw law = period_law(canonical_model, 1.0 / 12.0);
    const SamplerTable table = build_sampler(law, 4096);
    for (auto _ : state) benchmark::DoNotOptimize(sample_y(table, 10000, 42));
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleDraws);

} // namespace

BENCHMARK_MAIN();
