// Serial reference against the OpenMP kernels on the heavier sweeps.
#include "qrcft/parallel.hpp"
#include "qrcft/suites.hpp"

#include <benchmark/benchmark.h>

using namespace qrcft;

namespace {

ExecutionConfig config(const benchmark::State& state)
{
    if (state.range(0) == 0)
        return {Execution::serial, 0};
    return {Execution::parallel, static_cast<int>(state.range(0))};
}

void thread_args(benchmark::internal::Benchmark* b)
{
    b->ArgName("threads")->Arg(0);
    for (int t = 1; t <= available_threads(); t *= 2)
        b->Arg(t);
    b->Unit(benchmark::kMillisecond);
}

void BM_QrSplitting(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(check_qr_splitting(541, config(state)));
}
BENCHMARK(BM_QrSplitting)->Apply(thread_args);

void BM_SymbolRoutes(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(check_symbol_routes(211, 20, kDefaultSeed, config(state)));
}
BENCHMARK(BM_SymbolRoutes)->Apply(thread_args);

void BM_TransferRepIndependence(benchmark::State& state)
{
    const auto cases = cyclic_quotient_cases(abelian_corpus(), {Execution::serial, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_transfer_rep_independence(cases, 50, kDefaultSeed, config(state)));
}
BENCHMARK(BM_TransferRepIndependence)->Apply(thread_args);

void BM_TakagiWitness(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(check_takagi_witness(300, 60, 10000, config(state)));
}
BENCHMARK(BM_TakagiWitness)->Apply(thread_args);

} // namespace

BENCHMARK_MAIN();
