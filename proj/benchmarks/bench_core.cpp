#include <benchmark/benchmark.h>

#include "amitsur/coverage.hpp"
#include "amitsur/crossed_product.hpp"
#include "amitsur/field_tower.hpp"
#include "amitsur/monomial.hpp"
#include "amitsur/quotient_s.hpp"

using namespace amitsur;

static void BM_NormResultant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Integer> c(n - 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i % 5) - 2;
  const SElement s(n, c);
  for (auto _ : state) benchmark::DoNotOptimize(norm_resultant(s));
}
BENCHMARK(BM_NormResultant)->Arg(5)->Arg(9)->Arg(15)->Arg(23);

static void BM_Invert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SElement s = dihedral_generators(n).front();
  for (auto _ : state) benchmark::DoNotOptimize(invert(s));
}
BENCHMARK(BM_Invert)->Arg(5)->Arg(9)->Arg(15);

static void BM_CoverageDihedral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coverage_subgroup(n, n - 1));
}
BENCHMARK(BM_CoverageDihedral)->DenseRange(3, 15, 4)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveOracle(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_fixed_units(7, 1, 2, threads));
}
BENCHMARK(BM_ExhaustiveOracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Certificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(make_certificate(7, 6, 3)));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

static void BM_TauHatS3(benchmark::State& state) {
  const FieldTower tw = builtin_s3();
  const auto pts = sample_points(tw, 1, 8, 0);
  for (auto _ : state)
    for (const auto& p : pts) benchmark::DoNotOptimize(tau_hat(tw, p));
}
BENCHMARK(BM_TauHatS3)->Unit(benchmark::kMicrosecond);

static void BM_IdealRoundTrip(benchmark::State& state) {
  const RandomInstance inst = random_cyclic_instance(5, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lambda(inst.algebra, lambda_inv(inst.algebra, inst.chain)));
}
BENCHMARK(BM_IdealRoundTrip)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
