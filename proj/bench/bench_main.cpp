#include <cubic/grassmann.hpp>
#include <cubic/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

void oracle_sweep(benchmark::State& state, cubic::Execution exec) {
  const auto ring = cubic::grassmann::build_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cubic::grassmann::oracle_mismatches(ring, exec));
}

void runner(benchmark::State& state, cubic::Execution exec) {
  const auto cfg = cubic::verify::make_config(1, static_cast<int>(state.range(0)), {"all"},
                                              cubic::verify::Format::json);
  for (auto _ : state) benchmark::DoNotOptimize(cubic::verify::run(cfg, exec));
}

void BM_OracleSerial(benchmark::State& s) { oracle_sweep(s, cubic::Execution::serial); }
void BM_OracleParallel(benchmark::State& s) { oracle_sweep(s, cubic::Execution::parallel); }
void BM_RunnerSerial(benchmark::State& s) { runner(s, cubic::Execution::serial); }
void BM_RunnerParallel(benchmark::State& s) { runner(s, cubic::Execution::parallel); }

}  // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunnerSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunnerParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
