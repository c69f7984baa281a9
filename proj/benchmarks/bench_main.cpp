#include <benchmark/benchmark.h>

#include <numeric>

#include "disclosure/catalog.hpp"
#include "disclosure/dpconnected.hpp"
#include "disclosure/game.hpp"
#include "disclosure/hardness.hpp"
#include "disclosure/lpmech.hpp"
#include "disclosure/uniform2.hpp"

using namespace disclosure;

static void BM_PairSurplus(benchmark::State& state) {
  const uniform2::UniformSegment a(Rational(1, 3), Rational(1)), b(Rational(0), Rational(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(uniform2::pair_surplus(a, b));
}
BENCHMARK(BM_PairSurplus);

static void BM_ZenoProfile(benchmark::State& state) {
  const auto z = uniform2::zeno_partition(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uniform2::profile_surplus(z, z));
}
BENCHMARK(BM_ZenoProfile)->Arg(4)->Arg(8)->Arg(12);

static void BM_SolveMechanismThreeType(benchmark::State& state) {
  const auto inst = catalog::three_type_pair();
  for (auto _ : state) benchmark::DoNotOptimize(solve_mechanism(inst));
}
BENCHMARK(BM_SolveMechanismThreeType);

static void BM_SolveMechanismGrid(benchmark::State& state) {
  const long long n = state.range(0);
  std::vector<BuyerType> grid;
  for (long long k = 1; k <= n; ++k) grid.push_back({Rational(1, n), {Rational(2 * k - 1, 2 * n)}});
  const DiscreteInstance inst(1, {grid, grid});
  for (auto _ : state) benchmark::DoNotOptimize(solve_mechanism(inst));
}
BENCHMARK(BM_SolveMechanismGrid)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SearchThreeType(benchmark::State& state) {
  const auto inst = catalog::three_type_pair();
  for (auto _ : state) benchmark::DoNotOptimize(game::search_profiles(inst));
}
BENCHMARK(BM_SearchThreeType)->Unit(benchmark::kMillisecond);

static void BM_OptimalConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> values, probs;
  for (std::size_t i = 0; i < n; ++i) {
    values.emplace_back(static_cast<long long>(i + 1));
    probs.emplace_back(1, static_cast<long long>(n));
  }
  const dp::SingleBuyerInstance inst(values, probs);
  for (auto _ : state) benchmark::DoNotOptimize(dp::optimal_connected(inst));
}
BENCHMARK(BM_OptimalConnected)->Arg(8)->Arg(32)->Arg(64);

static void BM_VerifyReduction(benchmark::State& state) {
  const hardness::PartitionProblem pp({2, 2, 4, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(hardness::verify_reduction(pp));
}
BENCHMARK(BM_VerifyReduction)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
