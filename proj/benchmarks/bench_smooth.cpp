#include <benchmark/benchmark.h>

#include "nk/smooth_maps.hpp"

namespace {

using namespace nk::smooth;
using nk::linalg::IntMatrix;

void BM_FindFixedPoints(benchmark::State& state) {
  SmoothTorusMap f(IntMatrix{{2, 1}, {1, 0}},
                   {PerturbationMode{0, {1, 0}, 1e-3, 0.0}});
  SolverConfig cfg;
  cfg.grid_density = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_fixed_points(f, cfg));
}
BENCHMARK(BM_FindFixedPoints)->Arg(8)->Arg(16)->Arg(32);

void BM_JacobianEval(benchmark::State& state) {
  SmoothTorusMap f(IntMatrix{{2, 1}, {1, 1}},
                   {PerturbationMode{0, {2, 3}, 1e-4, 5e-5},
                    PerturbationMode{1, {1, 1}, 0.0, 1e-4}});
  std::vector<double> x{0.37, 0.71};
  for (auto _ : state) benchmark::DoNotOptimize(f.jacobian(x));
}
BENCHMARK(BM_JacobianEval);

}  // namespace
