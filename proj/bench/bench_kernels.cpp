// Serial vs OpenMP kernels on oracle-sized dense matrices.
// Run with OMP_NUM_THREADS=<k> to vary the thread count.

#include <benchmark/benchmark.h>

#include <random>

#include "oracle_forge/numeric/kernels.hpp"

namespace {

using oracle_forge::numeric::CMatrix;
using oracle_forge::numeric::Complex;
namespace kernels = oracle_forge::numeric::kernels;

CMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

template <CMatrix (*Kernel)(const CMatrix&, const CMatrix&)>
void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetComplexityN(state.range(0));
}

template <CMatrix (*Kernel)(const CMatrix&, const CMatrix&)>
void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = random_matrix(n, 3), b = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <std::vector<Complex> (*Kernel)(const CMatrix&, std::span<const Complex>)>
void BM_Apply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix m = random_matrix(n, 5);
  const std::vector<Complex> v(n, Complex(1.0, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, v));
}

}  // namespace

BENCHMARK(BM_Matmul<kernels::matmul_serial>)->Name("matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Matmul<kernels::matmul_parallel>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Kron<kernels::kron_serial>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Kron<kernels::kron_parallel>)->Name("kron/parallel")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Apply<kernels::apply_serial>)->Name("apply/serial")->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(BM_Apply<kernels::apply_parallel>)->Name("apply/parallel")->RangeMultiplier(4)->Range(64, 2048);

BENCHMARK_MAIN();
