// Serial reference vs OpenMP kernels on a corpus of the study's size.
//
//   ./build/bench/tagrec_bench --benchmark_filter=All

#include <benchmark/benchmark.h>

#include "support/synthetic.hpp"
#include "tagrec/ranking.hpp"

namespace {

using namespace tagrec;

const Folksonomy& corpus() {
  static const Folksonomy f = build_folksonomy(testing::synthetic_corpus());
  return f;
}

void BM_ContextBuild(benchmark::State& state) {
  for (auto _ : state) {
    RankingContext ctx(corpus(), {});
    benchmark::DoNotOptimize(ctx.document_score(0));
  }
}

void BM_RecommendOneSerial(benchmark::State& state) {
  const RankingContext ctx(corpus(), {});
  const auto user = corpus().users()[0];
  for (auto _ : state) benchmark::DoNotOptimize(serial::recommend(ctx, user, 5));
}

void BM_RecommendOneParallel(benchmark::State& state) {
  const RankingContext ctx(corpus(), {});
  const auto user = corpus().users()[0];
  for (auto _ : state) benchmark::DoNotOptimize(ctx.recommend(user, 5));
}

void BM_RecommendAllSerial(benchmark::State& state) {
  const RankingContext ctx(corpus(), {});
  for (auto _ : state) benchmark::DoNotOptimize(serial::recommend_all(ctx, 5));
}

void BM_RecommendAllParallel(benchmark::State& state) {
  const RankingContext ctx(corpus(), {});
  for (auto _ : state) benchmark::DoNotOptimize(ctx.recommend_all(5));
}

}  // namespace

BENCHMARK(BM_ContextBuild)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecommendOneSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecommendOneParallel)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_RecommendAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecommendAllParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
