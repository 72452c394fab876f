// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "confspace/braid/sym_hom.hpp"
#include "confspace/morph/feler.hpp"
#include "confspace/ratios/abc.hpp"
#include "confspace/ratios/complex.hpp"

using namespace confspace;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_BuildComplex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(8, Family::CR, exec_of(state)));
}

void BM_AllFaces(benchmark::State& state) {
  const RatioComplex c = build_complex(8, Family::SR);
  for (auto _ : state) benchmark::DoNotOptimize(all_faces(c, exec_of(state)));
}

void BM_SearchHoms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_homs(7, 7, exec_of(state)));
}

void BM_VerifyAbc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_abc(5, 2, exec_of(state)));
}

void BM_FelerNine(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
  std::vector<std::array<BigInt, 3>> points(32);
  for (auto& p : points) {
    for (auto& q : p) q = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(feler_nine_discriminants(points, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_BuildComplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllFaces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchHoms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAbc)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FelerNine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
