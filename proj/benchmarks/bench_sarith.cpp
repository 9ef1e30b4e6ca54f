#include <benchmark/benchmark.h>

#include "latred/sample.hpp"
#include "latred/sarith.hpp"

using namespace latred;

static void BM_FactorizeGL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(31);
  std::vector<Matrix<Rational>> mats;
  for (int i = 0; i < 16; ++i) mats.push_back(sample::rational_gl(rng, n, 50, 50));
  std::vector<Integer> T{2, 3};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sarith::factorize(IntegerRing{}, mats[i++ % mats.size()], T, sarith::Mode::GL));
}
BENCHMARK(BM_FactorizeGL)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_LocalizedLogvol(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(32);
  sarith::ZStructure S = sample::z_structure(rng, n);
  latz::InnerProduct s = sample::inner_product(rng, n);
  Matrix<Integer> w = sample::z_summand(rng, n, n / 2).basis();
  auto W = sarith::loc_summand(IntegerRing{}, w.map([](const Integer& x) -> Rational { return Rational(x); }));
  for (auto _ : state) benchmark::DoNotOptimize(sarith::loc_logvol(W, s, S));
}
BENCHMARK(BM_LocalizedLogvol)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);
