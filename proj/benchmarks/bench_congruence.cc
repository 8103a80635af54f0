#include <benchmark/benchmark.h>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/corpus.hpp"

namespace {

using namespace semiring_lab;

const FiniteSemiring& semiring_for(int id) {
  static const std::vector<FiniteSemiring> pool = {
      make_zmod(12),
      make_group_semiring_b(cyclic_group(2)),
      make_matrix_b(2),
      make_product(make_chain(4), make_chain(4)),
  };
  return pool[id];
}

void BM_EnumerateRightCongruences(benchmark::State& state) {
  const FiniteSemiring& s = semiring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_right_congruences(s));
  state.SetLabel(s.name);
}
BENCHMARK(BM_EnumerateRightCongruences)->DenseRange(0, 3);

void BM_ClassifyRegularity(benchmark::State& state) {
  const FiniteSemiring& s = semiring_for(static_cast<int>(state.range(0)));
  auto lattice = enumerate_right_congruences(s);
  for (auto _ : state)
    for (const Partition& mu : lattice) benchmark::DoNotOptimize(classify_regularity(s, mu));
  state.SetLabel(s.name);
}
BENCHMARK(BM_ClassifyRegularity)->DenseRange(0, 3);

void BM_EnumerateRightIdeals(benchmark::State& state) {
  const FiniteSemiring& s = semiring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_right_ideals(s));
  state.SetLabel(s.name);
}
BENCHMARK(BM_EnumerateRightIdeals)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
