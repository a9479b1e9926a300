#include <benchmark/benchmark.h>

#include "tritree/aggregate.hpp"
#include "tritree/lexgen.hpp"
#include "tritree/massshift.hpp"
#include "tritree/oracle.hpp"

using namespace tritree;

static void BM_dfs(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    long long n = 0;
    for (auto _ : state) {
        n = 0;
        dfs_enumerate(d, 0, [&](const position_seq&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
    state.counters["items"] = static_cast<double>(n);
}
BENCHMARK(BM_dfs)->DenseRange(6, 12, 2);

static void BM_dfs_memo(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    long long n = 0;
    for (auto _ : state) {
        n = 0;
        dfs_enumerate_memo(d, 0, [&](const position_seq&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
    state.counters["items"] = static_cast<double>(n);
}
BENCHMARK(BM_dfs_memo)->DenseRange(6, 12, 2);

static void BM_lexgen(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    long long n = 0;
    for (auto _ : state) {
        n = 0;
        all_paths gen(d, 0);
        while (gen.next()) ++n;
        benchmark::DoNotOptimize(n);
    }
    state.counters["items"] = static_cast<double>(n);
}
BENCHMARK(BM_lexgen)->DenseRange(6, 12, 2);

static void BM_unique(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    long long n = 0;
    for (auto _ : state) {
        n = 0;
        unique_tuples gen(d, 0);
        while (gen.next()) ++n;
        benchmark::DoNotOptimize(n);
    }
    state.counters["items"] = static_cast<double>(n);
}
BENCHMARK(BM_unique)->DenseRange(6, 18, 4);

static void BM_count(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_total(d, 0).total);
}
BENCHMARK(BM_count)->RangeMultiplier(4)->Range(16, 1024);

static void BM_value_dp(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    auto w = weight_table::affine("20", "2", d);
    for (auto _ : state) benchmark::DoNotOptimize(path_sum_distribution(d, 0, w).entries.size());
}
BENCHMARK(BM_value_dp)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
