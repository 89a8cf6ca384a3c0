// Serial vs OpenMP timings for the parallel kernels. Arg 0 = serial, 1 = parallel.
#include "blgeo/datum.hpp"
#include "blgeo/generators.hpp"
#include "blgeo/integrate.hpp"
#include "blgeo/polytope.hpp"
#include "blgeo/random.hpp"
#include "blgeo/search.hpp"

#include <benchmark/benchmark.h>

using namespace blgeo;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

VPolytope body(std::size_t n, std::size_t count, std::uint64_t seed)
{
    CounterRng rng(seed, 0);
    return random_body(n, count, rng);
}

void BM_Volume(benchmark::State& state)
{
    const VPolytope k = body(4, 24, 1);
    for (auto _ : state) benchmark::DoNotOptimize(volume(k, mode(state)));
}

void BM_MinkowskiCombination(benchmark::State& state)
{
    std::vector<MinkowskiTerm> terms;
    for (std::uint64_t i = 0; i < 3; ++i) terms.emplace_back(Rational(1) / Rational(3), body(3, 6, 10 + i));
    for (auto _ : state) benchmark::DoNotOptimize(minkowski_combination(terms, mode(state)));
}

void BM_Decompose(benchmark::State& state)
{
    CounterRng rng(2, 0);
    const BLDatum d = datum_from_cover(random_uniform_cover(6, 3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(d, mode(state)));
}

void BM_McVolume(benchmark::State& state)
{
    const HPolytope k = facets_of(body(3, 8, 3));
    for (auto _ : state) benchmark::DoNotOptimize(mc_volume(k, 100000, 7, mode(state)));
}

void BM_McExpGauge(benchmark::State& state)
{
    const HPolytope k = facets_of(body(3, 8, 4));
    for (auto _ : state) benchmark::DoNotOptimize(mc_exp_gauge(k, Rational(1), 100000, 7, mode(state)));
}

void BM_Search(benchmark::State& state)
{
    const BLDatum d = loomis_whitney_datum(3);
    for (auto _ : state) benchmark::DoNotOptimize(liakopoulos_search(d, 64, 5, 10, mode(state)));
}

}  // namespace

BENCHMARK(BM_Volume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinkowskiCombination)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McVolume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McExpGauge)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
