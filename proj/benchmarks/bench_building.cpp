#include <benchmark/benchmark.h>

#include "latred/building.hpp"
#include "latred/sample.hpp"

using namespace latred;

static void BM_Neighbors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  building::Context<local::PAdic> ctx{{Integer(state.range(1))}, n};
  auto v = building::canonical_vertex(ctx, Matrix<Rational>::identity(static_cast<std::size_t>(n), Rational(0), Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(building::neighbors(ctx, v));
}
BENCHMARK(BM_Neighbors)->ArgsProduct({{2, 3}, {2, 3, 5}})->Unit(benchmark::kMillisecond);

static void BM_ChamberCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(building::count_chambers_on_edge(n, 2, 1));
}
BENCHMARK(BM_ChamberCount)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Triangulate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(41);
  std::vector<std::vector<Rational>> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(sample::point(rng, n, 5, 7));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(building::triangulate_point(pts[i++ % pts.size()]));
}
BENCHMARK(BM_Triangulate)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);
