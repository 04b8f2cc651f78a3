#include <benchmark/benchmark.h>

#include "einf/suites.hpp"

namespace {

einf::SweepConfig bench_config() {
  einf::SweepConfig c;
  c.max_arity = 4;
  c.max_degree = 3;
  return c;
}

void BM_Serial(benchmark::State& state, const char* suite) {
  const einf::SweepConfig c = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(einf::run_suite_serial(suite, c));
}

void BM_Parallel(benchmark::State& state, const char* suite) {
  const einf::SweepConfig c = bench_config();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(einf::run_suite_parallel(suite, c, jobs));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, d2_x, "d2_x")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, d2_x, "d2_x")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, chainmap_tc, "chainmap_tc")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, chainmap_tc, "chainmap_tc")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, homotopy, "homotopy")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, homotopy, "homotopy")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
