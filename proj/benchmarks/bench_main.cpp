#include <benchmark/benchmark.h>

#include "qrep/eisenstein.hpp"
#include "qrep/hecke.hpp"
#include "qrep/lattice.hpp"
#include "qrep/repnum.hpp"
#include "qrep/singular.hpp"
#include "qrep/whittaker.hpp"

using namespace qrep;

static void BM_CountSquaresUpto(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(repnum::count_squares_upto(k, 10000));
}
BENCHMARK(BM_CountSquaresUpto)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CountHurwitzUpto(benchmark::State& state) {
  const auto lat = GramLattice::hurwitz();
  for (auto _ : state) benchmark::DoNotOptimize(repnum::count_order_upto(lat, state.range(0)));
}
BENCHMARK(BM_CountHurwitzUpto)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_R3Closed(benchmark::State& state) {
  for (auto _ : state) {
    MemoTables memo;
    for (std::int64_t m = 1; m <= 1000; ++m) benchmark::DoNotOptimize(repnum::r3_closed(m, &memo));
  }
}
BENCHMARK(BM_R3Closed)->Unit(benchmark::kMillisecond);

static void BM_GaussSumTable(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singular::GaussSumTable(k, 4).A(1));
}
BENCHMARK(BM_GaussSumTable)->Arg(1024)->Arg(6859)->Arg(28561)->Unit(benchmark::kMillisecond);

static void BM_DensityTable(benchmark::State& state) {
  const auto lat = GramLattice::sum_of_squares(4);
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto t = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(whittaker::DensityTable(lat, p, t).count(1));
}
BENCHMARK(BM_DensityTable)->Args({2, 10})->Args({3, 6})->Args({7, 3})->Unit(benchmark::kMillisecond);

static void BM_RhoThreeSquares(benchmark::State& state) {
  for (auto _ : state) {
    singular::OracleCache cache;
    benchmark::DoNotOptimize(singular::rho_s(5, 3, static_cast<std::uint64_t>(state.range(0)), cache));
  }
}
BENCHMARK(BM_RhoThreeSquares)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_CosetOracle(benchmark::State& state) {
  const auto N = state.range(0);
  for (auto _ : state)
    for (std::int64_t m = 1; m <= 100; ++m) benchmark::DoNotOptimize(hecke::coset_oracle(N, m));
}
BENCHMARK(BM_CosetOracle)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_AssembleWeight32(benchmark::State& state) {
  for (auto _ : state) {
    MemoTables memo;
    for (std::int64_t m = 1; m <= 1000; ++m) benchmark::DoNotOptimize(eisenstein::assemble_weight32(m, &memo));
  }
}
BENCHMARK(BM_AssembleWeight32)->Unit(benchmark::kMillisecond);

static void BM_AssembleWeight2(benchmark::State& state) {
  for (auto _ : state)
    for (std::int64_t m = 1; m <= 1000; ++m) benchmark::DoNotOptimize(eisenstein::assemble_weight2(6, 5, m));
}
BENCHMARK(BM_AssembleWeight2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
