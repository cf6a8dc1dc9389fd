// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "constellation/betti.hpp"
#include "constellation/gale.hpp"
#include "constellation/verify.hpp"
#include "constellation/z2.hpp"

using namespace constellation;

namespace {

SimplicialComplex bench_complex(int m) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(m));
  return random_complex(m, 12 * m, 0.35, rng);
}

// m points on a circle, rounded to integers, with one layer of noise in a
// third coordinate so that the configuration lives in R^3.
PointConfiguration bench_configuration(int m) {
  PointConfiguration x;
  x.dim = 3;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> z(-40, 40);
  for (int i = 0; i < m; ++i) {
    const double a = 2 * M_PI * i / m;
    x.points.push_back({Rational(static_cast<long>(std::lround(100 * std::cos(a)))),
                        Rational(static_cast<long>(std::lround(100 * std::sin(a)))), Rational(z(rng))});
  }
  return x;
}

void BM_HochsterSerial(benchmark::State& state) {
  const auto k = bench_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti_serial(k));
}

void BM_HochsterParallel(benchmark::State& state) {
  const auto k = bench_complex(static_cast<int>(state.range(0)));
  HochsterOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(k, Field::GF2, o));
}

void BM_Constellation(benchmark::State& state) {
  const auto x = bench_configuration(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(constellation_complex(x, threads));
}

void BM_FanoCircle(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fano_circle_experiment(20'000, 1, threads));
}

}  // namespace

BENCHMARK(BM_HochsterSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HochsterParallel)->ArgsProduct({{10, 12, 14}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Constellation)->ArgsProduct({{10, 12}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FanoCircle)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
