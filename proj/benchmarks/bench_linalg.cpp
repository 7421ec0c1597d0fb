#include <benchmark/benchmark.h>

#include <random>

#include "nk/block_cyclic.hpp"
#include "nk/int_matrix.hpp"
#include "nk/smith.hpp"

namespace {

using nk::linalg::IntMatrix;

IntMatrix random_matrix(std::size_t n, int seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_DetExact(benchmark::State& state) {
  auto m = random_matrix(state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(nk::linalg::det_exact(m));
}
BENCHMARK(BM_DetExact)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(state.range(0), 43);
  for (auto _ : state) benchmark::DoNotOptimize(nk::linalg::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_CyclicDetIdentity(benchmark::State& state) {
  std::vector<IntMatrix> blocks;
  for (int b = 0; b < 5; ++b) blocks.push_back(random_matrix(4, 50 + b));
  for (auto _ : state)
    benchmark::DoNotOptimize(nk::linalg::cyclic_det_identity_check(blocks));
}
BENCHMARK(BM_CyclicDetIdentity);

void BM_Cokernel(benchmark::State& state) {
  auto m = random_matrix(4, 77);
  for (auto _ : state) benchmark::DoNotOptimize(nk::linalg::cokernel(m));
}
BENCHMARK(BM_Cokernel);

}  // namespace
