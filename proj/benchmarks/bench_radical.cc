#include <benchmark/benchmark.h>

#include "semiring_lab/radical.hpp"
#include "semiring_lab/semimodule.hpp"

namespace {

using namespace semiring_lab;

void BM_Radical(benchmark::State& state) {
  const FiniteSemiring s = make_zmod(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rad(s, RadicalKind::s));
  state.SetLabel(s.name);
}
BENCHMARK(BM_Radical)->Arg(4)->Arg(8)->Arg(12);

void BM_RadicalMatrixB2(benchmark::State& state) {
  const FiniteSemiring s = make_matrix_b(2);
  for (auto _ : state) benchmark::DoNotOptimize(rad(s, RadicalKind::m));
}
BENCHMARK(BM_RadicalMatrixB2);

void BM_EnumerateSemimodules(benchmark::State& state) {
  const FiniteSemiring s =
      state.range(0) == 0 ? make_boolean() : make_zmod(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semimodules(s, 4));
  state.SetLabel(s.name);
}
BENCHMARK(BM_EnumerateSemimodules)->Arg(0)->Arg(3)->Arg(4);

void BM_HoehnkeCheck(benchmark::State& state) {
  const FiniteSemiring s = make_zmod(12);
  for (auto _ : state) benchmark::DoNotOptimize(hoehnke_check(s, RadicalKind::s));
}
BENCHMARK(BM_HoehnkeCheck);

}  // namespace

BENCHMARK_MAIN();
