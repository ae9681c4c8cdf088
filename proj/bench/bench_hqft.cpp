#include <benchmark/benchmark.h>

#include "hqft/census.hpp"
#include "hqft/cobordism.hpp"

using namespace hqft;

namespace {

CensusQuery z3_query() {
  CensusQuery q;
  q.ring = RingDesc::integers_mod(3);
  q.pi_rank = 1;
  q.ranks = {1, 1};
  return q;
}

AlgebraData z5_algebra() {
  const auto R = RingDesc::integers_mod(5);
  return make_cocycle_algebra(R, R.from_int(2), R.from_int(4));
}

void BM_CensusSerial(benchmark::State& state) {
  const CensusQuery q = z3_query();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_serial(q));
}

void BM_CensusParallel(benchmark::State& state) {
  const CensusQuery q = z3_query();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(q));
}

void BM_SurfaceTableSerial(benchmark::State& state) {
  const AlgebraData A = z5_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(surface_table_serial(A, static_cast<int>(state.range(0))));
}

void BM_SurfaceTableParallel(benchmark::State& state) {
  const AlgebraData A = z5_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(surface_table(A, static_cast<int>(state.range(0))));
}

void BM_VerifyExtended(benchmark::State& state) {
  const AlgebraData A = z5_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(verify_extended(A));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceTableSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceTableParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyExtended)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
