#include <benchmark/benchmark.h>

#include <vector>

#include "lgamble/binomial.hpp"
#include "lgamble/conformance.hpp"
#include "lgamble/utility.hpp"

namespace {

using namespace lgamble;

std::vector<Gamble> sample_gambles(int max_depth, std::size_t count) {
    std::vector<Gamble> out;
    GenConfig config{max_depth, 4, 0, 0};
    for (std::size_t i = 0; i < count; ++i) {
        config.seed = i;
        out.push_back(generate_gamble(config));
    }
    return out;
}

void BM_LikelihoodPrice(benchmark::State& state) {
    const BinomialScenario s(static_cast<int>(state.range(0)), static_cast<int>(state.range(0) / 3));
    for (auto _ : state) benchmark::DoNotOptimize(likelihood_price(s));
}
BENCHMARK(BM_LikelihoodPrice)->Arg(10)->Arg(1000)->Arg(100000);

void BM_EmitTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(emit_table(10, AmbiguityPremium(0.0)));
}
BENCHMARK(BM_EmitTable);

void BM_UtilityOfGamble(benchmark::State& state) {
    const auto gambles = sample_gambles(static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(utility_of_gamble(gambles[i++ % gambles.size()], AmbiguityPremium(0.3)));
}
BENCHMARK(BM_UtilityOfGamble)->DenseRange(1, 5, 2);

void BM_Flatten(benchmark::State& state) {
    const auto gambles = sample_gambles(static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(flatten(gambles[i++ % gambles.size()]));
}
BENCHMARK(BM_Flatten)->DenseRange(1, 5, 2);

}  // namespace

BENCHMARK_MAIN();
