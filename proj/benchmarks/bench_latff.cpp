#include <benchmark/benchmark.h>

#include "latred/latff.hpp"
#include "latred/sample.hpp"

using namespace latred;

static void BM_DiagonalBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteField& F = FiniteField::get(static_cast<std::uint32_t>(state.range(1)));
  sample::Rng rng(21);
  std::vector<latff::VolumeSpace> spaces;
  for (int i = 0; i < 16; ++i) spaces.push_back(sample::volume_space(rng, F, n));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(latff::diagonal_basis(spaces[i++ % spaces.size()]));
}
BENCHMARK(BM_DiagonalBasis)->ArgsProduct({{2, 3, 4, 6}, {2, 5}})->Unit(benchmark::kMicrosecond);

static void BM_FFInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteField& F = FiniteField::get(2);
  sample::Rng rng(22);
  latff::VolumeSpace vs = sample::volume_space(rng, F, n);
  for (auto _ : state) benchmark::DoNotOptimize(latff::ff_invariants_and_filtration(vs));
}
BENCHMARK(BM_FFInvariants)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);
