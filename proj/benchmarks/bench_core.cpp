#include <benchmark/benchmark.h>

#include "snakechar/duality.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/segments.hpp"
#include "snakechar/snakes.hpp"

namespace {

using namespace snakechar;

void bench_enum_paths_b(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = ((2 * n + 2 + 2) % 4 + 4) % 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enum_paths_B(n, 1, k));
    }
}
BENCHMARK(bench_enum_paths_b)->Arg(2)->Arg(3)->Arg(4);

void bench_char_snake_b2(benchmark::State& state) {
    const SnakeB s{2, {{1, 4}, {1, 8}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_snake_fresh(s));
    }
}
BENCHMARK(bench_char_snake_b2);

void bench_qchar_snake_a(benchmark::State& state) {
    const SnakeA s{6, {{2, 0}, {3, 5}, {1, 9}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qchar_snake(s));
    }
}
BENCHMARK(bench_qchar_snake_a);

void bench_identity_sides(benchmark::State& state) {
    const MultiSegment ms{3, {{0, 1}, {2, 3}}};
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_sides(ms, M));
    }
}
BENCHMARK(bench_identity_sides)->Arg(0)->Arg(2);

void bench_verify_branching(benchmark::State& state) {
    const SnakeB s{2, {{1, 4}, {1, 8}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_branching(s));
    }
}
BENCHMARK(bench_verify_branching);

void bench_fold_char(benchmark::State& state) {
    const Character c = char_snake(SnakeA{6, {{3, 1}}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fold_char(c));
    }
}
BENCHMARK(bench_fold_char);

void bench_det_char(benchmark::State& state) {
    const MultiSegment ms{4, {{0, 2}, {1, 4}, {3, 6}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_char(ms));
    }
}
BENCHMARK(bench_det_char);

}  // namespace

BENCHMARK_MAIN();
