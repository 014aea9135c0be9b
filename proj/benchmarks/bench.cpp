// Serial reference vs OpenMP kernel comparisons.

#include <benchmark/benchmark.h>

#include "farey/counting.hpp"
#include "farey/sequence.hpp"
#include "farey/sweeps.hpp"

namespace {

void BM_FullSequence_Recurrence(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto terms = farey::full_sequence_recurrence(n);
        benchmark::DoNotOptimize(terms.data());
    }
}
BENCHMARK(BM_FullSequence_Recurrence)->Arg(500)->Arg(2000);

void BM_FullSequence_Enumerate_Serial(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto terms = farey::full_sequence_enumerate(n, false);
        benchmark::DoNotOptimize(terms.data());
    }
}
BENCHMARK(BM_FullSequence_Enumerate_Serial)->Arg(500)->Arg(2000);

void BM_FullSequence_Enumerate_Parallel(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto terms = farey::full_sequence_enumerate(n, true);
        benchmark::DoNotOptimize(terms.data());
    }
}
BENCHMARK(BM_FullSequence_Enumerate_Parallel)->Arg(500)->Arg(2000);

void BM_CountTable_Serial(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto counts = farey::full_cardinalities_upto(n, false);
        benchmark::DoNotOptimize(counts.data());
    }
}
BENCHMARK(BM_CountTable_Serial)->Arg(2000);

void BM_CountTable_Parallel(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto counts = farey::full_cardinalities_upto(n, true);
        benchmark::DoNotOptimize(counts.data());
    }
}
BENCHMARK(BM_CountTable_Parallel)->Arg(2000);

farey::sweeps::Bounds sweep_bounds(std::int64_t n) {
    farey::sweeps::Bounds b;
    b.identity_max_n = n;
    b.registry_max_m = 4;
    b.registry_max_s = 2;
    b.registry_max_n = 16;
    return b;
}

void BM_IdentityLaws_Serial(benchmark::State& state) {
    const auto b = sweep_bounds(state.range(0));
    for (auto _ : state) {
        auto result = farey::sweeps::run_identity_laws(b, false);
        benchmark::DoNotOptimize(result.cases);
    }
}
BENCHMARK(BM_IdentityLaws_Serial)->Arg(36);

void BM_IdentityLaws_Parallel(benchmark::State& state) {
    const auto b = sweep_bounds(state.range(0));
    for (auto _ : state) {
        auto result = farey::sweeps::run_identity_laws(b, true);
        benchmark::DoNotOptimize(result.cases);
    }
}
BENCHMARK(BM_IdentityLaws_Parallel)->Arg(36);

void BM_Registry_Serial(benchmark::State& state) {
    const auto b = sweep_bounds(36);
    for (auto _ : state) {
        auto result = farey::sweeps::run_registry(b, false);
        benchmark::DoNotOptimize(result.cases);
    }
}
BENCHMARK(BM_Registry_Serial);

void BM_Registry_Parallel(benchmark::State& state) {
    const auto b = sweep_bounds(36);
    for (auto _ : state) {
        auto result = farey::sweeps::run_registry(b, true);
        benchmark::DoNotOptimize(result.cases);
    }
}
BENCHMARK(BM_Registry_Parallel);

} // namespace

BENCHMARK_MAIN();
