// Microbenchmarks for the hot paths: tracing, unfolding, enumeration,
// square codes, and oracle-driven reconstruction primitives.

#include <benchmark/benchmark.h>

#include "bounce/flow.hpp"
#include "bounce/language.hpp"
#include "bounce/oracle.hpp"
#include "bounce/reconstruction.hpp"
#include "bounce/sturmian.hpp"
#include "bounce/unfolding.hpp"

using namespace bounce;

namespace {

LabeledPolygon unit_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        {"A", "B", "C", "D"});
}

LabeledPolygon pentagon() {
    return make_polygon(
        {{0, 0}, {1.3, 0.1}, {1.7, 1.0}, {0.8, 1.6}, {-0.3, 0.9}},
        {"A", "B", "C", "D", "E"});
}

void bm_trace(benchmark::State& state) {
    const LabeledPolygon pent = pentagon();
    const std::size_t bounces = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace(pent, {0.31, 0.17}, 1.234, bounces));
    }
}
BENCHMARK(bm_trace)->Arg(16)->Arg(64)->Arg(256);

void bm_develop_corridor(benchmark::State& state) {
    const LabeledPolygon sq = unit_square();
    std::vector<EdgeLabel> letters;
    for (int i = 0; i < state.range(0); ++i) {
        letters.push_back("B");
        letters.push_back("D");
    }
    const BounceWord word(letters);
    for (auto _ : state) {
        benchmark::DoNotOptimize(corridor(develop(sq, word)));
    }
}
BENCHMARK(bm_develop_corridor)->Arg(2)->Arg(8)->Arg(32);

void bm_enumerate_language(benchmark::State& state) {
    const LabeledPolygon pent = pentagon();
    const std::size_t max_len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_language(pent, max_len));
    }
}
BENCHMARK(bm_enumerate_language)->Arg(3)->Arg(4)->Arg(5)
    ->Unit(benchmark::kMillisecond);

void bm_square_bounce_word(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sturmian::square_bounce_word(21, 34));
    }
}
BENCHMARK(bm_square_bounce_word);

void bm_oracle_membership(benchmark::State& state) {
    PolygonOracle oracle(pentagon());
    const std::vector<EdgeLabel> word{"A", "B", "C", "D", "E", "A"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle.contains(word));
    }
}
BENCHMARK(bm_oracle_membership);

void bm_adjacency_square(benchmark::State& state) {
    for (auto _ : state) {
        PolygonOracle oracle(unit_square());
        benchmark::DoNotOptimize(adjacency_pairs(oracle, 4));
    }
}
BENCHMARK(bm_adjacency_square)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
