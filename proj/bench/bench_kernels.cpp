// Serial reference versus OpenMP kernels on the two hot paths: the
// dominance-cover scan and Freudenthal's multiplicity table.

#include <benchmark/benchmark.h>

#include "affgr/degeneration.hpp"
#include "affgr/weyl_module.hpp"

using namespace affgr;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_CoverScanF4(benchmark::State& state) {
  auto f4 = build_root_datum("F4");
  const Weight lambda(f4, {3, 3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(covers_below(lambda, mode(state)));
  label(state);
}

void BM_CoverScanE6(benchmark::State& state) {
  auto e6 = build_root_datum("E6");
  const Weight lambda(e6, {1, 0, 1, 0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(covers_below(lambda, mode(state)));
  label(state);
}

void BM_FreudenthalF4(benchmark::State& state) {
  auto f4 = build_root_datum("F4");
  const Weight lambda(f4, {2, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(FreudenthalTable(lambda, mode(state)).dominant().size());
  label(state);
}

void BM_FreudenthalE6(benchmark::State& state) {
  auto e6 = build_root_datum("E6");
  const Weight lambda(e6, {1, 1, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(FreudenthalTable(lambda, mode(state)).dominant().size());
  label(state);
}

}  // namespace

BENCHMARK(BM_CoverScanF4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CoverScanE6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FreudenthalF4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FreudenthalE6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
