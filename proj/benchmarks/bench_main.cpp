#include <benchmark/benchmark.h>

#include "jordanet/catalog.hpp"
#include "jordanet/chow.hpp"
#include "jordanet/classify.hpp"
#include "jordanet/jordan.hpp"
#include "jordanet/linalg.hpp"
#include "jordanet/mpoly.hpp"
#include "jordanet/varieties.hpp"

using namespace jordanet;

static void BM_PolyMultiply(benchmark::State& state) {
  const auto p = MPoly::parse("(x+y+z+1)^8");
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMultiply);

static void BM_ParseGenericChowDet(benchmark::State& state) {
  const std::string text = chow_det_generic_n3().to_string();
  for (auto _ : state) benchmark::DoNotOptimize(MPoly::parse(text));
}
BENCHMARK(BM_ParseGenericChowDet)->Unit(benchmark::kMillisecond);

// Determinant of the generic symmetric matrix of size n.
static void BM_DetLaplace(benchmark::State& state) {
  const auto m = generic_symmetric(static_cast<std::size_t>(state.range(0)), "a");
  for (auto _ : state) benchmark::DoNotOptimize(det_laplace(m));
}
BENCHMARK(BM_DetLaplace)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DetBareiss(benchmark::State& state) {
  const auto m = generic_symmetric(static_cast<std::size_t>(state.range(0)), "a");
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_DetBareiss)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SymbolicChowMatrix(benchmark::State& state) {
  const std::vector<PolyMatrix> basis = {generic_symmetric(3, "x"), generic_symmetric(3, "y"), generic_symmetric(3, "z")};
  for (auto _ : state) benchmark::DoNotOptimize(chow_matrix(basis, {"s", "t", "u"}));
}
BENCHMARK(BM_SymbolicChowMatrix)->Unit(benchmark::kMillisecond);

// Full 6x6 symbolic determinant; JORDANET_CACHE_DIR must be unset to time the expansion.
static void BM_GenericChowDet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chow_det_generic_n3());
}
BENCHMARK(BM_GenericChowDet)->Unit(benchmark::kMillisecond);

static void BM_ChowRank(benchmark::State& state) {
  const auto& l = catalog_space("netrank8").space;
  for (auto _ : state) benchmark::DoNotOptimize(chow_rank(l));
}
BENCHMARK(BM_ChowRank);

static void BM_IsJordan(benchmark::State& state) {
  const auto& l = catalog_space("intro/L2").space;
  for (auto _ : state) benchmark::DoNotOptimize(is_jordan(l));
}
BENCHMARK(BM_IsJordan);

static void BM_ClassifyNet(benchmark::State& state) {
  const auto& l = catalog_space("thm51/3b1").space;
  for (auto _ : state) benchmark::DoNotOptimize(classify_net_S4(l));
}
BENCHMARK(BM_ClassifyNet)->Unit(benchmark::kMillisecond);

static void BM_MacaulayCertificate(benchmark::State& state) {
  const auto system = rank_one_system(catalog_space("prop54/Lstar").space);
  for (auto _ : state) benchmark::DoNotOptimize(macaulay_sweep(system, generic_variables(3)));
}
BENCHMARK(BM_MacaulayCertificate);

BENCHMARK_MAIN();
