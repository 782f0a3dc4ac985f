// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "casweep/kernels.hpp"

using namespace casweep;

namespace {

LocalRule xor_radius_form() { return named_rule("xor_left").radius_form(1); }

void BM_StairCount(benchmark::State& st, bool parallel) {
    const LocalRule fr = xor_radius_form();
    const auto m = static_cast<unsigned>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(parallel ? kernels::stair_count_parallel(fr, m) : kernels::stair_count_serial(fr, m));
}

void BM_StairList(benchmark::State& st, bool parallel) {
    const LocalRule fr = xor_radius_form();
    const auto m = static_cast<unsigned>(st.range(0));
    for (auto _ : st) {
        auto v = parallel ? kernels::stair_list_parallel(fr, m) : kernels::stair_list_serial(fr, m);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_StrongMasks(benchmark::State& st, bool parallel) {
    const LocalRule fr = named_rule("ca102").radius_form(1);
    const auto m = static_cast<unsigned>(st.range(0));
    for (auto _ : st) {
        auto v = parallel ? kernels::strong_masks_parallel(fr, m) : kernels::strong_masks_serial(fr, m);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_Representations(benchmark::State& st, bool parallel) {
    const BlockRule swap(2, 2, {0, 2, 1, 3});
    const LocalRule f = LocalRule::shift(2);
    Rng rng(7);
    const EpConfig y = random_config(rng, 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(parallel ? kernels::count_representations_parallel(swap, f, y, 0)
                                          : kernels::count_representations_serial(swap, f, y, 0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_StairCount, serial, false)->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_StairCount, parallel, true)->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_StairList, serial, false)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_StairList, parallel, true)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_StrongMasks, serial, false)->DenseRange(2, 6);
BENCHMARK_CAPTURE(BM_StrongMasks, parallel, true)->DenseRange(2, 6);
BENCHMARK_CAPTURE(BM_Representations, serial, false);
BENCHMARK_CAPTURE(BM_Representations, parallel, true);

BENCHMARK_MAIN();
