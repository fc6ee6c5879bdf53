#include <benchmark/benchmark.h>

#include <random>

#include "bhspin/bhspin.hpp"

namespace {

const bhspin::ModelParams kPoint{2.0, 1.0, 1.0, 0.6};

void BM_PartitionFunction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::log_partition_function(kPoint));
}
BENCHMARK(BM_PartitionFunction);

void BM_HeatCapacity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::heat_capacity(kPoint));
}
BENCHMARK(BM_HeatCapacity);

void BM_Negativity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::negativity(kPoint).negativity);
}
BENCHMARK(BM_Negativity);

void BM_PartialTransposeNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::partial_transpose_numeric(kPoint));
}
BENCHMARK(BM_PartialTransposeNumeric);

void BM_JacobiEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  bhspin::linalg::Matrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::linalg::sym_eigen(m));
}
BENCHMARK(BM_JacobiEigen)->Arg(3)->Arg(9);

void BM_FindCrossings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::find_crossings(7.0, 1.0, {0.0, 30.0}));
}
BENCHMARK(BM_FindCrossings);

void BM_Sweep(benchmark::State& state) {
  bhspin::SweepSpec s;
  s.variable = bhspin::SweepVariable::kTau;
  s.start = 0.0;
  s.stop = 30.0;
  s.steps = 601;
  s.fixed = {0.0, 7.0, 1.0, 0.6};
  s.outputs = {bhspin::Output::kNegativity, bhspin::Output::kHeatCapacity};
  for (auto _ : state) benchmark::DoNotOptimize(bhspin::run_sweep(s, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
