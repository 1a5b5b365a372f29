#include "tww/contraction.hpp"
#include "tww/generators.hpp"
#include "tww/geometry.hpp"
#include "tww/matrix.hpp"
#include "tww/winwin.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tww;

namespace {

Matrix noise(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

void BM_GridRank(benchmark::State& state) {
  Matrix m = noise(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(grid_rank(m));
}
BENCHMARK(BM_GridRank)->Arg(6)->Arg(10)->Arg(14);

void BM_PatternSearch(benchmark::State& state) {
  Matrix m = noise(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_universal_pattern(m, 2, Side::above));
}
BENCHMARK(BM_PatternSearch)->Arg(20)->Arg(40);

void BM_TerrainVisibility(benchmark::State& state) {
  Terrain t = gen_random_terrain(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(terrain_visibility(t).graph.size());
}
BENCHMARK(BM_TerrainVisibility)->Arg(50)->Arg(200);

void BM_PolygonVisibility(benchmark::State& state) {
  SimplePolygon p = gen_random_polygon(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(polygon_visibility(p).graph.size());
}
BENCHMARK(BM_PolygonVisibility)->Arg(20)->Arg(40);

void BM_ExactTwinWidth(benchmark::State& state) {
  Graph g = seven_vertex_example();
  for (auto _ : state) benchmark::DoNotOptimize(exact_twinwidth(g).value);
}
BENCHMARK(BM_ExactTwinWidth);

void BM_DecidePolygonAlpha(benchmark::State& state) {
  ClassInstance inst = make_instance(gen_random_polygon(static_cast<int>(state.range(0)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(decide(inst, Param::alpha, 4).answer);
}
BENCHMARK(BM_DecidePolygonAlpha)->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
