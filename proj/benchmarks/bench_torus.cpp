#include <benchmark/benchmark.h>

#include "nk/torus_maps.hpp"

namespace {

using namespace nk::torus;
using nk::linalg::IntMatrix;

void BM_Analyze(benchmark::State& state) {
  TorusMap f(IntMatrix{{3, 1}, {1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f));
}
BENCHMARK(BM_Analyze);

void BM_AnalyzeProductPair(benchmark::State& state) {
  std::vector<TorusMap> fs{TorusMap(IntMatrix{{2, 1}, {1, 1}}),
                           TorusMap(IntMatrix{{2, 1}, {1, 0}})};
  for (auto _ : state) benchmark::DoNotOptimize(analyze_product(fs));
}
BENCHMARK(BM_AnalyzeProductPair);

void BM_AnalyzeCyclicTriple(benchmark::State& state) {
  CyclicTorusMap f({TorusMap(IntMatrix{{1, 1}, {0, 1}}),
                    TorusMap(IntMatrix{{1, 0}, {1, 1}}),
                    TorusMap(IntMatrix{{2, 1}, {1, 1}})});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_cyclic(f));
}
BENCHMARK(BM_AnalyzeCyclicTriple);

}  // namespace
