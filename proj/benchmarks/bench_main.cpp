#include <benchmark/benchmark.h>

#include "cyclav/arith.hpp"
#include "cyclav/enumerate.hpp"
#include "cyclav/oracle.hpp"
#include "cyclav/surfaces.hpp"
#include "cyclav/weil.hpp"

using namespace cyclav;

static void BM_Factorize64(benchmark::State& state) {
  // Product of two 32-bit primes.
  const Int n = Int(4294967291UL) * Int(4294967279UL);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize64);

static void BM_CyclicityCheck(benchmark::State& state) {
  const IsogenyClass c = make_class(2, 23, 3, {438, 72293});
  for (auto _ : state) benchmark::DoNotOptimize(is_cyclic_class(c));
}
BENCHMARK(BM_CyclicityCheck);

static void BM_EnumerateSurfaceSlice(benchmark::State& state) {
  const FieldSize f = FieldSize::make(3, static_cast<unsigned>(state.range(0)));
  EnumOptions opts;
  opts.jobs = 1;
  const std::vector<Int> prefix{-4};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_both(2, prefix, f, opts));
}
BENCHMARK(BM_EnumerateSurfaceSlice)->Arg(4)->Arg(6)->Arg(8);

static void BM_EnumerateCurves(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(p, 1));
}
BENCHMARK(BM_EnumerateCurves)->Arg(31)->Arg(61)->Arg(101);

static void BM_MaximalFieldClass(benchmark::State& state) {
  const FieldSize f = FieldSize::make(13, 2);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_field_class(f, 1));
}
BENCHMARK(BM_MaximalFieldClass);
BENCHMARK_MAIN();
