#include <benchmark/benchmark.h>

#include "wilf/enumeration.hpp"

using namespace wilf;

namespace {

void BM_CountAvoiders(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ClassSpec spec = ClassSpec::of(BaseClass::Involutions, n, {Permutation::parse("1234")});
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(spec));
}

void BM_CountAlternating(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ClassSpec spec = ClassSpec::of(BaseClass::AlternatingInvolutions, n, {Permutation::parse("1243")});
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(spec));
}

void BM_Motzkin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(motzkin(n));
}

}  // namespace

BENCHMARK(BM_CountAvoiders)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_CountAlternating)->Arg(10)->Arg(12)->Arg(14);
BENCHMARK(BM_Motzkin)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
