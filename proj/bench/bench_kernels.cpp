// Serial reference path against the OpenMP path for the whole-group kernels.

#include <benchmark/benchmark.h>

#include "cellscope/cells.hpp"
#include "cellscope/classify.hpp"

namespace cs = cellscope;

namespace {

cs::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? cs::Execution::serial : cs::Execution::parallel;
}

void BM_RsCells(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::rs_cells(n, n, mode(state)));
}

void BM_ApproxCells(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::approx_cells(n, n, mode(state)));
}

void BM_VerifyTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs::verify_main_theorem(n, cs::CellMethod::rs, n, mode(state)));
  }
}

void BM_IntervalCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cp = cs::rs_cells(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(cs::interval_classification_check(n, cp, mode(state)));
}

}  // namespace

BENCHMARK(BM_RsCells)->ArgsProduct({{7, 8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApproxCells)->ArgsProduct({{7, 8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTheorem)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalCheck)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
