#include <benchmark/benchmark.h>

#include "pathsys/builder.hpp"
#include "pathsys/solver.hpp"
#include "pathsys/unique.hpp"

using namespace pathsys;

static void BM_Build2Chromatic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_2chromatic(n));
  }
}
BENCHMARK(BM_Build2Chromatic)->Arg(60)->Arg(120)->Arg(198);

static void BM_Walecki(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamilton_path_decomposition(n));
  }
}
BENCHMARK(BM_Walecki)->Arg(50)->Arg(100);

static void BM_Build109(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_unique_109());
  }
}
BENCHMARK(BM_Build109);

static void BM_VerifyDecomposition109(benchmark::State& state) {
  ExtensionContext ctx = build_unique_109();
  auto target = GraphSpec::complete(ctx.system.vertices());
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_decomposition(ctx.system.blocks(), target));
  }
}
BENCHMARK(BM_VerifyDecomposition109);

static void BM_Enumerate109(benchmark::State& state) {
  ExtensionContext ctx = build_unique_109();
  for (auto _ : state) {
    auto result = enumerate_2colourings(ctx.system, 28, 2, {100'000'000, 600.0});
    if (result.colourings.size() != 1) state.SkipWithError("unexpected colouring count");
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Enumerate109);

static void BM_ForcedPair28(benchmark::State& state) {
  ForcedPairCertificate cert = build_forced_pair_28();
  for (auto _ : state) {
    auto result = forced_distinct(cert.system, 27, 28, {10'000'000, 60.0});
    if (result.answer != Answer::yes) state.SkipWithError("forced pair not proved");
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ForcedPair28);

static void BM_UniquePipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ExtendOptions options;
  options.check_noncritical = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unique_pipeline(n, options));
  }
}
BENCHMARK(BM_UniquePipeline)->Arg(114)->Arg(150);

BENCHMARK_MAIN();
