// Wall-time microbenchmarks over uniform populations. The two sweeps mirror
// the usual plots: time against M at fixed N, and time against N at fixed M.
// Each run also reports the comparison tally as a counter.

#include "ndsort/bench.hpp"
#include "ndsort/datagen.hpp"

#include <benchmark/benchmark.h>

namespace {

template <ndsort::Algorithm A>
void BM_Rank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto population = ndsort::gen_uniform(n, m, 1);
    std::uint64_t comparisons = 0;
    for (auto _ : state) {
        ndsort::ComparisonTally tally;
        auto ranks = ndsort::rank_with(A, population, tally);
        benchmark::DoNotOptimize(ranks);
        comparisons = tally.count;
    }
    state.counters["comparisons"] = static_cast<double>(comparisons);
}

void fixed_n(benchmark::internal::Benchmark* b)
{
    for (int n : {500, 1000}) {
        for (int m : {3, 5, 10, 15, 20}) {
            b->Args({n, m});
        }
    }
}

void fixed_m(benchmark::internal::Benchmark* b)
{
    for (int m : {5, 10, 20}) {
        for (int n : {500, 1000, 2000, 4000}) {
            b->Args({n, m});
        }
    }
}

} // namespace

BENCHMARK(BM_Rank<ndsort::Algorithm::Mnds>)->Apply(fixed_n)->Apply(fixed_m)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank<ndsort::Algorithm::EnsSs>)->Apply(fixed_n)->Apply(fixed_m)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank<ndsort::Algorithm::EnsBs>)->Apply(fixed_n)->Apply(fixed_m)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank<ndsort::Algorithm::Fnds>)->Apply(fixed_n)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
