// Microbenchmarks for the hot paths: argument reduction, exponential-sum
// evaluation (both modes), reciprocal-distance totals, tail-sup sweeps, and
// index classification.

#include <benchmark/benchmark.h>

#include "sinesum/counting.hpp"
#include "sinesum/diophantine.hpp"
#include "sinesum/polynomial.hpp"
#include "sinesum/precision.hpp"
#include "sinesum/sequences.hpp"
#include "sinesum/series.hpp"
#include "sinesum/weyl.hpp"

namespace {

using namespace sinesum;

void BM_arg_power(benchmark::State& state) {
    auto x = PrecisionReal::from_double(0.7);
    unsigned long long k = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arg_power(k, 1.5, x).to_double());
        k = k % 1000000 + 1;
    }
}
BENCHMARK(BM_arg_power);

void BM_weyl_sum_fast(benchmark::State& state) {
    auto f = PolynomialQ::monomial(Rat(1), 3);
    auto x = PrecisionReal::from_double(0.7);
    auto P = (unsigned long long)state.range(0);
    for (auto _ : state) {
        auto ws = weyl_sum(f, x, P, WeylMode::Fast);
        benchmark::DoNotOptimize(ws.re);
    }
    state.SetItemsProcessed((std::int64_t)state.iterations() * (std::int64_t)P);
}
BENCHMARK(BM_weyl_sum_fast)->Arg(10000)->Arg(100000);

void BM_weyl_sum_direct(benchmark::State& state) {
    auto f = PolynomialQ::monomial(Rat(1), 3);
    auto x = PrecisionReal::from_double(0.7);
    auto P = (unsigned long long)state.range(0);
    for (auto _ : state) {
        auto ws = weyl_sum(f, x, P, WeylMode::Direct);
        benchmark::DoNotOptimize(ws.re);
    }
    state.SetItemsProcessed((std::int64_t)state.iterations() * (std::int64_t)P);
}
BENCHMARK(BM_weyl_sum_direct)->Arg(2000);

void BM_min_recip_sum(benchmark::State& state) {
    auto y = PrecisionReal::from_double(0.41);
    auto m = (unsigned long long)state.range(0);
    for (auto _ : state) {
        auto rep = min_recip_sum(y, m, 3);
        benchmark::DoNotOptimize(rep.value);
    }
}
BENCHMARK(BM_min_recip_sum)->Arg(60)->Arg(200);

void BM_tail_sup_sweep(benchmark::State& state) {
    auto seq = CoeffSequence::from_id("inv_k");
    auto grid = uniform_grid((int)state.range(0));
    for (auto _ : state) {
        auto sw = tail_sup_sweep(seq, 1.0, grid, 1, {5000}, 1);
        benchmark::DoNotOptimize(sw.checkpoints[0].sup_abs);
    }
}
BENCHMARK(BM_tail_sup_sweep)->Arg(50);

void BM_classify_index(benchmark::State& state) {
    auto y = PrecisionReal::from_double(0.41);
    long long m = 2187;
    for (auto _ : state) {
        auto ic = classify_index(m, y, 1.0 / 7.0, 3);
        benchmark::DoNotOptimize(ic.verdict);
        m = m == 2187 ? 60000 : 2187;
    }
}
BENCHMARK(BM_classify_index);

} // namespace

BENCHMARK_MAIN();
