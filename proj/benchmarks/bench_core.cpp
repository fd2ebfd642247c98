#include <benchmark/benchmark.h>

#include "monideal/corpus.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/depth_synth.hpp"
#include "monideal/filtrations.hpp"
#include "monideal/homology.hpp"

using namespace mi;

namespace {

MonomialIdeal example_J() {
  std::vector<Monomial> gens = {{4, 0, 0}, {3, 1, 0}, {1, 3, 0}, {0, 4, 0}, {2, 2, 1}};
  return MonomialIdeal(PolyRing{"y", "z", "t"}, gens);
}

void BM_BettiTablePower(benchmark::State& state) {
  const auto Q = power(block_type1(2).ideal, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_table_quotient(Q));
  }
}
BENCHMARK(BM_BettiTablePower)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DepthGlued(benchmark::State& state) {
  const auto Q = power(block_type2(2).ideal, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_quotient(Q));
  }
}
BENCHMARK(BM_DepthGlued)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Power(benchmark::State& state) {
  const auto I = example_J();
  for (auto _ : state) {
    benchmark::DoNotOptimize(power(I, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Power)->RangeMultiplier(2)->Range(2, 16);

void BM_IrreducibleDecomposition(benchmark::State& state) {
  const auto ideals = random_ideals(20260101, 50);
  for (auto _ : state) {
    for (const auto& I : ideals) {
      benchmark::DoNotOptimize(irreducible_decomposition(I));
    }
  }
}
BENCHMARK(BM_IrreducibleDecomposition);

void BM_SymbolicPower(benchmark::State& state) {
  const auto ideals = random_ideals(20260101, 20);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (const auto& I : ideals) {
      benchmark::DoNotOptimize(symbolic_power(I, n));
    }
  }
}
BENCHMARK(BM_SymbolicPower)->DenseRange(1, 4);

void BM_IntegralClosure(benchmark::State& state) {
  const auto I = power(example_J(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_closure(I));
  }
}
BENCHMARK(BM_IntegralClosure)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
