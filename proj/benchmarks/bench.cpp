#include <benchmark/benchmark.h>

#include "ratcycle/census.hpp"
#include "ratcycle/orbit.hpp"
#include "ratcycle/parity_vector.hpp"

using namespace ratcycle;

static void BM_Orbit(benchmark::State& state) {
    Rational2 x(mpz_class(state.range(0)), mpz_class(757));
    for (auto _ : state) {
        auto out = orbit(x, 100000);
        benchmark::DoNotOptimize(out.cycle.size());
    }
}
BENCHMARK(BM_Orbit)->Arg(43)->Arg(85)->Arg(499);

static void BM_Invariants(benchmark::State& state) {
    ParityVector v;
    v.bits.resize(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < v.bits.size(); ++i) v.bits[i] = (i * 7 + 3) % 3 == 0;
    for (auto _ : state) {
        auto inv = invariants(v);
        benchmark::DoNotOptimize(inv.rho.get_mpz_t());
    }
}
BENCHMARK(BM_Invariants)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_SearchDenominator(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = search_denominator(static_cast<std::uint64_t>(state.range(0)), 500,
                                      100000);
        benchmark::DoNotOptimize(rep.attractors.size());
    }
}
BENCHMARK(BM_SearchDenominator)->Arg(13)->Arg(511)->Arg(757);

static void BM_EnumeratePrimitive(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t count = 0;
        enumerate_vectors(static_cast<std::uint64_t>(state.range(0)), true,
                          [&](const ParityVector&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePrimitive)->Arg(12)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
