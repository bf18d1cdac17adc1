#include <benchmark/benchmark.h>

#include "np/np.hpp"

namespace {

using namespace np;

IntMatrix four_dim(long D, unsigned k) { return counterexample_matrix({CounterexampleKind::FourDim, 5, Integer(D), k}); }

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = four_dim(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(5)->Arg(11);

void BM_GroupElements(benchmark::State& state) {
  const auto ds = DiagonalSimplex::from_matrix(four_dim(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(group_elements(ds));
  state.SetItemsProcessed(state.iterations() * ds.group_order().get_si());
}
BENCHMARK(BM_GroupElements)->Arg(2)->Arg(3)->Arg(5);

void BM_NewtonPolygonDiagonal(benchmark::State& state) {
  const auto ds = DiagonalSimplex::from_matrix(four_dim(3, 2));
  const Integer p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon_diag(ds, p));
}
BENCHMARK(BM_NewtonPolygonDiagonal)->Arg(5)->Arg(19)->Arg(1009);

void BM_Weight(benchmark::State& state) {
  const auto delta = build(make_family("bi_kloosterman", {{"u", {1, 1, 1}}, {"v", {1, 1, 1}}}).support);
  const LatticePoint u = make_point({3, -2, 5});
  for (auto _ : state) benchmark::DoNotOptimize(weight(delta, u));
}
BENCHMARK(BM_Weight);

void BM_WeightLinearProgram(benchmark::State& state) {
  const auto delta = build(make_family("bi_kloosterman", {{"u", {1, 1, 1}}, {"v", {1, 1, 1}}}).support);
  const LatticePoint u = make_point({3, -2, 5});
  for (auto _ : state) benchmark::DoNotOptimize(weight_lp(delta, u));
}
BENCHMARK(BM_WeightLinearProgram);

void BM_HodgeNumbers(benchmark::State& state) {
  const auto delta = build(make_family("kloosterman", {{"n", {state.range(0)}}}).support);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_numbers(delta));
}
BENCHMARK(BM_HodgeNumbers)->Arg(2)->Arg(3)->Arg(4);

void BM_CompleteCollapse(benchmark::State& state) {
  const auto pts = make_family("dilated_simplex", {{"n", {2}}, {"d", {state.range(0)}}, {"D", {1}}}).support.points;
  const auto strategy = static_cast<Strategy>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(complete_collapse(pts, strategy));
}
BENCHMARK(BM_CompleteCollapse)->ArgsProduct({{2, 3}, {0, 1, 2}});

void BM_Certificate(benchmark::State& state) {
  const auto s = make_family("generalized_kloosterman", {{"v", {2, 3, 5}}}).support;
  for (auto _ : state) benchmark::DoNotOptimize(generic_ordinary_certificate(s, Integer(31)));
}
BENCHMARK(BM_Certificate);

void BM_RegularSubdivision(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(regular_subdivision(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_RegularSubdivision)->Args({2, 4})->Args({3, 3})->Args({4, 2});

}  // namespace

BENCHMARK_MAIN();
