#include <benchmark/benchmark.h>

#include <bmn/construct.hpp>
#include <bmn/engine.hpp>
#include <bmn/reverse.hpp>
#include <bmn/stochastic.hpp>

using namespace bmn;

namespace {

void BM_RandomGame(benchmark::State& state) {
    Simulator sim;
    std::uint64_t i = 0;
    const PlayOptions opts{kDefaultMaxTricks, Detect::Brent, false};
    for (auto _ : state) {
        const GameState deal = randomDeal({DealKind::Uniform, 1}, i++);
        benchmark::DoNotOptimize(sim.play(deal, opts));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RandomGame);

void BM_RandomGameHashSet(benchmark::State& state) {
    Simulator sim;
    std::uint64_t i = 0;
    const PlayOptions opts{kDefaultMaxTricks, Detect::HashSet, false};
    for (auto _ : state) {
        const GameState deal = randomDeal({DealKind::Uniform, 1}, i++);
        benchmark::DoNotOptimize(sim.play(deal, opts));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RandomGameHashSet);

void BM_PlayTrick(benchmark::State& state) {
    const GameState s = randomDeal({DealKind::Uniform, 1}, 0);
    for (auto _ : state) benchmark::DoNotOptimize(playTrick(s));
}
BENCHMARK(BM_PlayTrick);

void BM_Predecessors(benchmark::State& state) {
    const GameState s = parseGameState("1. --------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-AJ- 2. J- (1)");
    for (auto _ : state) benchmark::DoNotOptimize(predecessorsOf(s));
}
BENCHMARK(BM_Predecessors);

void BM_TemplateTest(benchmark::State& state) {
    const CardSeq c = parseCardSeq("--Q-Q-Q-Q-K-K");
    for (auto _ : state) benchmark::DoNotOptimize(templateTest(c));
}
BENCHMARK(BM_TemplateTest);

}  // namespace
BENCHMARK_MAIN();
