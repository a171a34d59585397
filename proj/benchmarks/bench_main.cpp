#include <benchmark/benchmark.h>

#include "nsg/cyclotomic.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/identities.hpp"
#include "nsg/sylvester.hpp"

using namespace nsg;

namespace {

const GeneratorTuple& quintuple() {
    static const GeneratorTuple t = validate_generators({19, 23, 29, 31, 37});
    return t;
}

void BM_DenumerantTable(benchmark::State& state) {
    const auto& t = quintuple();
    for (auto _ : state) benchmark::DoNotOptimize(denumerant_table(t, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DenumerantTable)->Arg(200)->Arg(2000)->Arg(20000);

void BM_HilbertNumerator(benchmark::State& state) {
    const auto& t = quintuple();
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(t));
}
BENCHMARK(BM_HilbertNumerator);

void BM_WaveTablesCold(benchmark::State& state) {
    const auto t = validate_generators({8, 9, 10, 12});
    for (auto _ : state) {
        SylvesterWaves waves(t);
        benchmark::DoNotOptimize(waves.total(100));
    }
}
BENCHMARK(BM_WaveTablesCold);

void BM_WaveEvalWarm(benchmark::State& state) {
    const SylvesterWaves waves(quintuple());
    waves.total(0);
    std::int64_t s = 0;
    for (auto _ : state) benchmark::DoNotOptimize(waves.total(s++ % 1000));
}
BENCHMARK(BM_WaveEvalWarm);

void BM_CyclotomicMultiply(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const auto a = CyclotomicNumber(q, 3) + CyclotomicNumber::root_power(q, 1) * BigRational(1, 7);
    const auto b = CyclotomicNumber(q, -2) + CyclotomicNumber::root_power(q, 5) * BigRational(5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(37)->Arg(60);

void BM_Theorem2Quintuple(benchmark::State& state) {
    const auto& t = quintuple();
    const auto q = hilbert_numerator(t);
    for (auto _ : state) benchmark::DoNotOptimize(theorem2_verify(q, t));
}
BENCHMARK(BM_Theorem2Quintuple);

} // namespace
BENCHMARK_MAIN();
