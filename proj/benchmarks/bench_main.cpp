#include <benchmark/benchmark.h>

#include "htcover/covers.hpp"
#include "htcover/decomposition.hpp"
#include "htcover/theorem.hpp"

using namespace htcover;

namespace {

// Args: {t, n}
void BM_Power(benchmark::State& state) {
  const MonomialIdeal j = cover_ideal(build_ht(static_cast<int>(state.range(0))));
  const int n = static_cast<int>(state.range(1));
  std::size_t gens = 0;
  for (auto _ : state) {
    MonomialIdeal p = power(j, n);
    gens = p.size();
    benchmark::DoNotOptimize(p);
  }
  state.counters["generators"] = static_cast<double>(gens);
}
BENCHMARK(BM_Power)->Args({1, 4})->Args({1, 6})->Args({2, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

void decompose_with(benchmark::State& state, DecomposeOptions::Algorithm algorithm) {
  const MonomialIdeal p =
      power(cover_ideal(build_ht(static_cast<int>(state.range(0)))), static_cast<int>(state.range(1)));
  DecomposeOptions options;
  options.algorithm = algorithm;
  std::size_t count = 0;
  for (auto _ : state) {
    auto cs = irredundant_decomposition(p, options);
    count = cs.size();
    benchmark::DoNotOptimize(cs);
  }
  state.counters["components"] = static_cast<double>(count);
}

void BM_DecomposeSplitting(benchmark::State& state) { decompose_with(state, DecomposeOptions::Algorithm::kSplitting); }
void BM_DecomposeIncremental(benchmark::State& state) {
  decompose_with(state, DecomposeOptions::Algorithm::kIncremental);
}
BENCHMARK(BM_DecomposeSplitting)->Args({1, 3})->Args({1, 4})->Args({2, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeIncremental)
    ->Args({1, 3})
    ->Args({1, 4})
    ->Args({2, 3})
    ->Args({2, 4})
    ->Args({2, 5})
    ->Unit(benchmark::kMillisecond);

void BM_IntersectClosedForm(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const ClosedForm cf = closed_form_power_decomposition(t, static_cast<int>(state.range(1)), ClusterRule::kLifted);
  const auto components = cf.all();
  const RingPtr ring = build_ht(t).ring();
  for (auto _ : state) benchmark::DoNotOptimize(intersect_components(ring, components));
  state.counters["components"] = static_cast<double>(components.size());
}
BENCHMARK(BM_IntersectClosedForm)->Args({1, 5})->Args({2, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

void BM_OneCoverMembership(benchmark::State& state) {
  const Graph g = build_ht(2);
  const int n = static_cast<int>(state.range(0));
  const DegreeVector a = DegreeVector::constant(g.vertex_count(), g.all(), n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_into_one_covers(g, a, n));
}
BENCHMARK(BM_OneCoverMembership)->Arg(2)->Arg(4)->Arg(6);

void BM_InducedOddCycles(benchmark::State& state) {
  const Graph g = build_ht(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_induced_odd_cycles(g));
}
BENCHMARK(BM_InducedOddCycles)->DenseRange(1, 4);

void BM_ClusterVectors(benchmark::State& state) {
  const Graph g = build_ht(4);
  const auto clusters = enumerate_r_clusters(g, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& c : clusters) benchmark::DoNotOptimize(enumerate_nhat_admissible(c, g, n));
  }
  state.counters["clusters"] = static_cast<double>(clusters.size());
}
BENCHMARK(BM_ClusterVectors)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
