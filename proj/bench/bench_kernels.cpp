// Serial reference kernels against their OpenMP counterparts on catalog
// near-rings of growing order.

#include <benchmark/benchmark.h>

#include "nearring/catalog.hpp"
#include "nearring/classify.hpp"

using namespace nearring;

namespace {

const char* const kNames[] = {"klein4_ring", "m0_z3", "mat2_f2", "m0_klein4", "ext_mat2f2_f2sq"};

void BM_Validate(benchmark::State& state, Exec exec) {
  const NearRing N = builtin(kNames[state.range(0)]);
  for (auto _ : state) {
    auto v = validate_nearring(N.add_table(), N.mul_table(), N.one(), N.labels(), N.name(), exec);
    benchmark::DoNotOptimize(v);
  }
  state.SetLabel(N.name());
}

void BM_Analysis(benchmark::State& state, Exec exec) {
  const NearRing N = builtin(kNames[state.range(0)]);
  for (auto _ : state) {
    Analysis A(N, exec);
    benchmark::DoNotOptimize(A.structure());
  }
  state.SetLabel(N.name());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Validate, serial, Exec::serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Validate, parallel, Exec::parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analysis, serial, Exec::serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analysis, parallel, Exec::parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
