#include "symhecke/catalog.hpp"
#include "symhecke/kernels.hpp"

#include <benchmark/benchmark.h>

#ifndef SYMHECKE_DEFAULT_CATALOG
#define SYMHECKE_DEFAULT_CATALOG "catalog"
#endif

using namespace symhecke;

namespace {

const PairData& f4()
{
    static const PairData P = build_pair(resolve_entry(SYMHECKE_DEFAULT_CATALOG, "f4_split"));
    return P;
}

void BM_CayleySerial(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(kernels::cayley_serial(f4().W.group));
}

void BM_CayleyParallel(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(kernels::cayley_parallel(f4().W.group));
}

void BM_BruhatSerial(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(kernels::bruhat_serial(f4().W.group));
}

void BM_BruhatParallel(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(kernels::bruhat_parallel(f4().W.group));
}

void BM_BruhatTrialsSerial(benchmark::State& st)
{
    f4().W.group.bruhat_rows();
    for (auto _ : st) benchmark::DoNotOptimize(check_bruhat_values_serial(f4().W, int(st.range(0)), 1));
}

void BM_BruhatTrialsParallel(benchmark::State& st)
{
    f4().W.group.bruhat_rows();
    for (auto _ : st) benchmark::DoNotOptimize(check_bruhat_values(f4().W, int(st.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_CayleySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatTrialsSerial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatTrialsParallel)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
