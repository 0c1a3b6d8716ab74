// OpenMP kernels against their serial references.
//   bench_kernels --benchmark_filter=Jad

#include "skewcorr/jad.hpp"
#include "skewcorr/states.hpp"
#include "skewcorr/sweep.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace skewcorr;

namespace {

MatrixSet block_set(int m, int n) {
  const auto rho = random_mixed(m, n, m * n, 17);
  return MatrixSet::from_blocks(extract_blocks(psd_sqrt(rho), m, n));
}

JadOptions with_restarts(int r) {
  JadOptions o;
  o.restarts = r;
  return o;
}

void BM_JadSerial(benchmark::State& state) {
  const MatrixSet set = block_set(static_cast<int>(state.range(0)), 3);
  const JadOptions opts = with_restarts(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(jad_serial(set, opts).objective);
}

void BM_JadOpenMP(benchmark::State& state) {
  const MatrixSet set = block_set(static_cast<int>(state.range(0)), 3);
  const JadOptions opts = with_restarts(static_cast<int>(state.range(1)));
  omp_set_num_threads(static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(jad(set, opts).objective);
  omp_set_num_threads(1);
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig config{"werner", static_cast<int>(state.range(0)), -1.0, 1.0, 21, {}};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(config).size());
}

void BM_SweepOpenMP(benchmark::State& state) {
  const SweepConfig config{"werner", static_cast<int>(state.range(0)), -1.0, 1.0, 21, {}};
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config, threads).size());
}

}  // namespace

BENCHMARK(BM_JadSerial)->Args({3, 5})->Args({6, 5})->Args({6, 15})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JadOpenMP)
    ->Args({3, 5, 1})
    ->Args({6, 5, 1})
    ->Args({6, 5, 4})
    ->Args({6, 15, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->Args({4, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
