#include <benchmark/benchmark.h>

#include <fuzzfrac/analysis.hpp>
#include <fuzzfrac/solver.hpp>

using namespace fuzzfrac;

namespace {

Rifs sample_system() {
  const double x[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  const double c[] = {2, 3, 5, 4, 5};
  const double s[] = {2, 1, 3, 2, 1};
  std::vector<DataPoint> pts;
  for (int k = 0; k < 5; ++k) pts.push_back({x[k], FuzzyNumber::triangular(c[k], s[k], s[k])});
  return Rifs::build(FuzzyDataSet(std::move(pts)), AddressMap({{0, 2}, {1, 4}, {0, 2}, {1, 3}}),
                     {0.3, 0.33, 0.65, 0.5});
}

void BM_DInf(benchmark::State& state) {
  const auto grid = LambdaGrid::uniform(static_cast<std::size_t>(state.range(0)));
  const auto u = FuzzyNumber::triangular(1.0, 2.0, 3.0, grid.size() - 1);
  const auto v = FuzzyNumber::triangular(1.5, 1.0, 4.0, grid.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(d_inf(u, v));
}
BENCHMARK(BM_DInf)->Arg(16)->Arg(64)->Arg(256);

void BM_ApplyOperator(benchmark::State& state) {
  const auto r = sample_system();
  const auto density = static_cast<std::size_t>(state.range(0));
  const TransformOperator op(r, node_aligned_grid(r.data(), density));
  const auto phi = node_interpolant(r.data(), density);
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(phi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.grid().size()));
}
BENCHMARK(BM_ApplyOperator)->Arg(64)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

void BM_Solve(benchmark::State& state) {
  const auto r = sample_system();
  const SolveOptions opts{static_cast<std::size_t>(state.range(0)), 1e-8, 10000, 0};
  for (auto _ : state) benchmark::DoNotOptimize(solve(r, opts));
}
BENCHMARK(BM_Solve)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ChaosGame(benchmark::State& state) {
  const auto r = sample_system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chaos_game(r, static_cast<std::size_t>(state.range(0)), 100, 1));
  }
}
BENCHMARK(BM_ChaosGame)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
