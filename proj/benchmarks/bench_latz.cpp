#include <benchmark/benchmark.h>

#include "latred/latz.hpp"
#include "latred/sample.hpp"

using namespace latred;

static void BM_CanonicalFiltrationZ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(11);
  std::vector<latz::InnerProduct> forms;
  for (int i = 0; i < 16; ++i) forms.push_back(sample::inner_product(rng, n));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(latz::canonical_filtration(forms[i++ % forms.size()]));
}
BENCHMARK(BM_CanonicalFiltrationZ)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ShortestNormZ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(12);
  latz::InnerProduct s = sample::inner_product(rng, n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(latz::shortest_norm_sq(s));
}
BENCHMARK(BM_ShortestNormZ)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);
