#include "treereg/harness.hpp"
#include "treereg/regularity.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace treereg;

namespace {

Graph bench_graph(int n) { return random_tree(n, 7).graph(); }

void BM_BettiSerial(benchmark::State& state)
{
    const Graph g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_serial(g));
}

void BM_BettiParallel(benchmark::State& state)
{
    const Graph g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table(g));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_RecordsSerial(benchmark::State& state)
{
    const auto codes = enumerate_tree_codes(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_records_serial(codes, 0));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codes.size()));
}

void BM_RecordsParallel(benchmark::State& state)
{
    const auto codes = enumerate_tree_codes(static_cast<int>(state.range(0)));
    const int jobs = omp_get_max_threads();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_records(codes, 0, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codes.size()));
    state.counters["threads"] = jobs;
}

} // namespace

BENCHMARK(BM_BettiSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecordsSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecordsParallel)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
