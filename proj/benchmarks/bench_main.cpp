#include <benchmark/benchmark.h>

#include "tririgid/braced.hpp"
#include "tririgid/generators.hpp"
#include "tririgid/global_rigidity.hpp"
#include "tririgid/rigidity.hpp"

using namespace tririgid;

namespace {

PlaneTriangulation walk(int n) { return flip_walk(n, 4 * n, 1, false); }
// The 4-connected walk repairs separating triangles by flipping, which is slow past n ~ 40.
PlaneTriangulation walk4(int n) { return flip_walk(n, 4 * n, 1, true); }

// Generic rank of a triangulation's rigidity matrix.
void BM_GenericRank(benchmark::State& state) {
  const PlaneTriangulation t = walk(static_cast<int>(state.range(0)));
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(t.graph(), 3, rng, 1));
}
BENCHMARK(BM_GenericRank)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_RationalRank(benchmark::State& state) {
  const PlaneTriangulation t = walk(static_cast<int>(state.range(0)));
  const RationalField f;
  RandomSource rng(1);
  const auto fw = make_framework(t.graph(), 3, f, random_config(t.num_vertices(), 3, f, rng));
  for (auto _ : state) benchmark::DoNotOptimize(framework_rank(fw));
}
BENCHMARK(BM_RationalRank)->Arg(8)->Arg(12);

void BM_SeparatingQuads(benchmark::State& state) {
  const PlaneTriangulation t = walk4(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(separating_quads(t));
}
BENCHMARK(BM_SeparatingQuads)->Arg(12)->Arg(24)->Arg(32);

void BM_DecideBraced(benchmark::State& state) {
  const PlaneTriangulation t = walk4(static_cast<int>(state.range(0)));
  Vertex far = 1;
  while (t.graph().has_edge(0, far)) ++far;
  const BracedTriangulation g(t, {Edge(0, far)});
  for (auto _ : state) {
    RandomSource rng(3);
    benchmark::DoNotOptimize(decide_braced(g, rng));
  }
}
BENCHMARK(BM_DecideBraced)->Arg(8)->Arg(12)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_GhtCheck(benchmark::State& state) {
  const PlaneTriangulation t = walk4(static_cast<int>(state.range(0)));
  SimpleGraph g = t.graph();
  Vertex far = 1;
  while (g.has_edge(0, far)) ++far;
  g.add_edge(0, far);
  for (auto _ : state) {
    RandomSource rng(4);
    benchmark::DoNotOptimize(ght_check(g, 3, rng));
  }
}
BENCHMARK(BM_GhtCheck)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
