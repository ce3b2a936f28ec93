#include <benchmark/benchmark.h>

#include "pqpoly/identity_suite.hpp"

namespace {

pqpoly::SuiteConfig bench_config(long n_max) {
    pqpoly::SuiteConfig cfg;
    cfg.n_max = n_max;
    return cfg;
}

void BM_SuiteSerial(benchmark::State& state) {
    const auto cfg = bench_config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pqpoly::run_all_serial(cfg));
}

void BM_SuiteParallel(benchmark::State& state) {
    const auto cfg = bench_config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pqpoly::run_all(cfg));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
