#include <benchmark/benchmark.h>

#include <random>

#include "mcat/linvec.hpp"

namespace {

mcat::ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  auto real = [&rng] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
  mcat::ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = mcat::Complex(real(), real());
  return m;
}

void BM_Svd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const mcat::ComplexMatrix m = random_matrix(rng, n, n);
  for (auto _ : state) {
    auto s = mcat::linvec::svd(m);
    benchmark::DoNotOptimize(s.singular_values);
  }
}
BENCHMARK(BM_Svd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_OperatorSchmidt(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  const mcat::ComplexMatrix m = random_matrix(rng, d * d, d * d);
  const mcat::linvec::TensorSplit split{d, d, d, d};
  for (auto _ : state) {
    auto s = mcat::linvec::operator_schmidt(m, split);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(BM_OperatorSchmidt)->Arg(2)->Arg(3)->Arg(4);

void BM_Invert(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const mcat::ComplexMatrix m = random_matrix(rng, n, n);
  for (auto _ : state) {
    auto inv = mcat::linvec::invert(m);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
