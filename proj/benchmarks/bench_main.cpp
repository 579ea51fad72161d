#include <benchmark/benchmark.h>

#include "layerstab/layerstab.hpp"

using namespace layerstab;

static void BM_OracleEnergy(benchmark::State& state) {
    const auto c = InterfaceCoefficients::from_tensions({1.0, 0.3, 0.7});
    const auto s = LayerStructure::optimal(LayerKind::BilayerVUV, 5.0, c);
    PerturbationSpectrum p(4, 3, 5.0);
    p.set_a(0, 1, 0.2);
    p.set_b(1, 2, 0.1);
    p.set_a(3, 3, -0.15);
    const OracleSettings o{.grid = static_cast<int>(state.range(0)), .estimate_error = false};
    for (auto _ : state) benchmark::DoNotOptimize(energy(s, p, 0.1, c, o).total);
}
BENCHMARK(BM_OracleEnergy)->Arg(64)->Arg(128)->Arg(256);

static void BM_Jacobi4(benchmark::State& state) {
    const auto m = tilde_b1_matrix(0.6, 0.5).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigen(m));
}
BENCHMARK(BM_Jacobi4);

static void BM_AggregatedThreshold(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(aggregated_threshold(LayerKind::BilayerVUV, 50.0, 100));
        benchmark::DoNotOptimize(aggregated_threshold(LayerKind::Monolayer, 50.0, 100));
    }
}
BENCHMARK(BM_AggregatedThreshold);

static void BM_EstimateAlpha(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(estimate_alpha(100, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EstimateAlpha)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
