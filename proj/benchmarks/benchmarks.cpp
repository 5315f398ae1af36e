// Benchmarks for the hot paths: exact rank on the equality systems, vertex
// enumeration and decomposition at desk scale, the two Latin-counting
// routes, and the big-number helpers they lean on.

#include "stp/bounds.hpp"
#include "stp/enumeration.hpp"
#include "stp/polytope.hpp"
#include "stp/rational.hpp"
#include "stp/tensor.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EqualityRank(benchmark::State& state) {
  const auto h = stp::build_omega_h(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stp::rank(h.equalities));
}
BENCHMARK(BM_EqualityRank)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateVertices(benchmark::State& state) {
  const auto h = stp::build_omega_h(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stp::enumerate_vertices(h).vertices.size());
}
BENCHMARK(BM_EnumerateVertices)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto h = stp::build_omega_h(3);
  const auto hull = stp::affine_hull(h);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto t = stp::random_tensor(3, seed++);
    benchmark::DoNotOptimize(stp::caratheodory_decompose(h, hull, t).size());
  }
}
BENCHMARK(BM_Decompose);

void BM_LatinBacktracking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stp::count_latin_squares_backtracking(n));
}
BENCHMARK(BM_LatinBacktracking)->Arg(4)->Arg(5);

void BM_LatinPermanentFormula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stp::latin_count_shao_wei(4));
}
BENCHMARK(BM_LatinPermanentFormula)->Unit(benchmark::kMillisecond);

void BM_BigBinomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stp::binomial(635, 271));
}
BENCHMARK(BM_BigBinomial);

void BM_DecimalString(benchmark::State& state) {
  const stp::Rational value(stp::new_upper(10));
  for (auto _ : state) benchmark::DoNotOptimize(stp::decimal_string(value));
}
BENCHMARK(BM_DecimalString);

}  // namespace

BENCHMARK_MAIN();
