// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "sdc/kernels.hpp"
#include "sdc/pipeline.hpp"

using namespace sdc;

namespace {

LinearCode corpus_code(const char* label) {
    return reported_code(SpecFile::load(std::string(SDC_CORPUS_DIR) + "/" + label + ".spec").base_code());
}

// First k rows of the D6 image: a [64,k] subcode.
PackedCode d6_subcode(std::size_t k) {
    const auto g = systematic_form(corpus_code("D6")).code.generator();
    return PackedCode::from(LinearCode(g.block(0, 0, k, g.cols())));
}

void BM_weight_distribution(benchmark::State& state, bool parallel) {
    const auto code = d6_subcode(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? kernels::weight_distribution_parallel(code)
                                          : kernels::weight_distribution_serial(code));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_ternary_distribution(benchmark::State& state, bool parallel) {
    const auto code = PackedCode::from(corpus_code("ex7a"));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? kernels::weight_distribution_parallel(code)
                                          : kernels::weight_distribution_serial(code));
}

void BM_low_weight_counts(benchmark::State& state, bool parallel) {
    const auto plan = make_info_sets(corpus_code("D6"));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? kernels::low_weight_counts_parallel(plan, 14)
                                          : kernels::low_weight_counts_serial(plan, 14));
}

void BM_min_distance(benchmark::State& state, bool parallel) {
    const auto plan = make_info_sets(corpus_code("ex5"));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? kernels::min_distance_parallel(plan) : kernels::min_distance_serial(plan));
}

void BM_search(benchmark::State& state, bool parallel) {
    SearchJob job;
    job.construction = Construction::II;
    job.ring = RingKind::F2U;
    job.n = 4;
    job.lambdas = {{RingKind::F2U, 1}, {RingKind::F2U, 3}};
    job.strategy = Strategy::Random;
    job.seed = 11;
    job.budget = static_cast<std::uint64_t>(state.range(0));
    job.parallel = parallel;
    for (auto _ : state) benchmark::DoNotOptimize(search_constructions(job));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_weight_distribution, serial, false)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_weight_distribution, parallel, true)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ternary_distribution, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ternary_distribution, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_low_weight_counts, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_low_weight_counts, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_min_distance, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_min_distance, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search, serial, false)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search, parallel, true)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
