#include <benchmark/benchmark.h>

#include "secantry/secantry.hpp"

using namespace secantry;

static void BM_CastelnuovoSum(benchmark::State& state) {
    const long long d = state.range(0);
    for (auto _ : state) {
        auto count = castelnuovo(d, 50, 3);
        benchmark::DoNotOptimize(count.value);
    }
}
BENCHMARK(BM_CastelnuovoSum)->Arg(20)->Arg(100)->Arg(200);

static void BM_ConsistencyGrid(benchmark::State& state) {
    const long long dmax = state.range(0);
    for (auto _ : state) {
        auto report = consistency_check(dmax, 25);
        benchmark::DoNotOptimize(report.checked);
    }
}
BENCHMARK(BM_ConsistencyGrid)->Arg(40)->Arg(80);

static void BM_ChainCount(benchmark::State& state) {
    const long long g = state.range(0);
    // rho(g, 3, d) = 0 along d = 3 + 3g/4
    const long long d = 3 + 3 * g / 4;
    for (auto _ : state) {
        auto count = count_chain_series(ChainSpec::unramified(g, 3, d));
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ChainCount)->Arg(4)->Arg(8)->Arg(12);

static void BM_ChainEnumerate(benchmark::State& state) {
    for (auto _ : state) {
        auto paths = enumerate_chain_series(ChainSpec::unramified(10, 1, 6), 1000);
        benchmark::DoNotOptimize(paths.paths.size());
    }
}
BENCHMARK(BM_ChainEnumerate);

static void BM_SecantConstructionSweep(benchmark::State& state) {
    for (auto _ : state) {
        long long built = 0;
        for (long long e = 1; e <= 12; ++e)
            for (long long f = 0; f < e; ++f)
                for (long long r = e - f; r <= 12; ++r) {
                    if (f * (r + 1 - e + f) < e) continue;
                    for (long long d = 2 * e - f - 1; d <= 16; ++d) {
                        if (rho(e, r - e + f, d - e) < 0) continue;
                        benchmark::DoNotOptimize(
                            build_secant_construction(SecantProblem(8, d, r, e, f)));
                        ++built;
                    }
                }
        benchmark::DoNotOptimize(built);
    }
}
BENCHMARK(BM_SecantConstructionSweep);

BENCHMARK_MAIN();
