#include <random>

#include <benchmark/benchmark.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/cohomology.hpp"
#include "hopfkit/projectivity.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(f, d(rng));
  return m;
}

void BM_RankQ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(FieldSpec::rationals(), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankQ)->Arg(16)->Arg(32)->Arg(64);

void BM_RankF3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(FieldSpec::prime(3), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankF3)->Arg(32)->Arg(64)->Arg(128);

void BM_KleinCrossedBuild(benchmark::State& state) {
  const auto d = klein_crossed_data(FieldSpec::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(crossed_coproduct(d.sigma, d.tau, BuildOptions{state.range(0) != 0}));
}
BENCHMARK(BM_KleinCrossedBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Center(benchmark::State& state) {
  const auto d = klein_crossed_data(FieldSpec::prime(3));
  const auto k = crossed_coproduct(d.sigma, d.tau);
  for (auto _ : state) benchmark::DoNotOptimize(center(*k));
}
BENCHMARK(BM_Center)->Unit(benchmark::kMillisecond);

void BM_TensorAndProjectivity(benchmark::State& state) {
  const auto d = klein_crossed_data(FieldSpec::prime(3));
  const auto k = crossed_coproduct(d.sigma, d.tau);
  const auto m = place_in_component(klein_module_u(d, k), k, d.g->index_of("h"));
  for (auto _ : state) {
    const auto mm = tensor_module(m, m);
    benchmark::DoNotOptimize(is_projective(mm));
  }
}
BENCHMARK(BM_TensorAndProjectivity)->Unit(benchmark::kMillisecond);

void BM_SplitTest(benchmark::State& state) {
  const auto s = shift_smash(2);
  const auto u = shift_module_u(s);
  for (auto _ : state) benchmark::DoNotOptimize(is_projective_split(u));
}
BENCHMARK(BM_SplitTest)->Unit(benchmark::kMillisecond);

void BM_HochschildZ2Squared(benchmark::State& state) {
  const auto a = group_algebra(cyclic_product({2, 2}), FieldSpec::prime(2));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_dims(a, n));
}
BENCHMARK(BM_HochschildZ2Squared)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
