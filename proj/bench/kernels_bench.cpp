// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "skelmc/binary_matrix.hpp"
#include "skelmc/classify.hpp"
#include "skelmc/oracle.hpp"
#include "skelmc/skeleton.hpp"

using namespace skelmc;

namespace {

BinaryMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, coin(rng));
  return m;
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinaryMatrix p = random_matrix(n, 0.02, 1), q = random_matrix(n, 0.02, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bool_multiply(p, q));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinaryMatrix p = random_matrix(n, 0.02, 1), q = random_matrix(n, 0.02, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::bool_multiply(p, q));
}

void BM_ReachSum(benchmark::State& state) {
  const BinaryMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 0.01, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reach_sum(m));
}

void BM_ReachSumSerial(benchmark::State& state) {
  const BinaryMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 0.01, 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::reach_sum(m));
}

void BM_Lift(benchmark::State& state) {
  const SupportKernel k = random_kernel(2, static_cast<std::size_t>(state.range(0)), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lift(k));
}

void BM_LiftSerial(benchmark::State& state) {
  const SupportKernel k = random_kernel(2, static_cast<std::size_t>(state.range(0)), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(serial::lift(k));
}

void BM_Classify(benchmark::State& state) {
  const SupportKernel k = random_kernel(2, static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(k));
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(256)->Arg(1024);
BENCHMARK(BM_MultiplySerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ReachSum)->Arg(64)->Arg(256);
BENCHMARK(BM_ReachSumSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_Lift)->Arg(12)->Arg(16);
BENCHMARK(BM_LiftSerial)->Arg(12)->Arg(16);
BENCHMARK(BM_Classify)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
