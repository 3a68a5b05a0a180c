#include "stern/bernoulli.hpp"
#include "stern/congruences.hpp"
#include "stern/power_sums.hpp"

#include <benchmark/benchmark.h>

using namespace stern;

static void BM_GeneralizedBernoulliUncached(benchmark::State& state) {
    const auto chars = enumerate_primitive(2, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        for (const auto& chi : chars) {
            benchmark::DoNotOptimize(generalized_bernoulli_uncached(12, chi));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(chars.size()));
}
BENCHMARK(BM_GeneralizedBernoulliUncached)->DenseRange(3, 6);

static void BM_CyclotomicMultiply(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    auto x = CyclotomicElement(Rational(3, 7), N) + CyclotomicElement::zeta(N, 1) * Rational(-5);
    const auto y = CyclotomicElement::zeta(N, 3) + CyclotomicElement(Rational(2), N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(16)->Arg(27)->Arg(49);

static void BM_PowerSum(benchmark::State& state) {
    const auto chi = enumerate_primitive(5, 2).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_sum(static_cast<unsigned>(state.range(0)), 125, chi));
    }
}
BENCHMARK(BM_PowerSum)->Arg(4)->Arg(12);

static void BM_Theorem11Sweep(benchmark::State& state) {
    const auto chars = enumerate_primitive(2, 4);
    for (auto _ : state) {
        BernoulliCache::global().clear();
        for (const auto& chi : chars) {
            for (unsigned k = 0; k <= 12; ++k) {
                if (opposite_parity(k, chi)) {
                    benchmark::DoNotOptimize(verify_thm11(chi, k, 2, 1));
                }
            }
        }
    }
}
BENCHMARK(BM_Theorem11Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
