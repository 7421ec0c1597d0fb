#include <benchmark/benchmark.h>

#include "nk/automorphisms.hpp"
#include "nk/product_group.hpp"

namespace {

using namespace nk::groups;

void BM_AutS3Squared(benchmark::State& state) {
  ProductGroupSpec spec({ProductFactor{FiniteGroup::symmetric(3), 2}});
  ProductGroup p(spec);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(p));
}
BENCHMARK(BM_AutS3Squared);

void BM_SubgroupLattice(benchmark::State& state) {
  auto g = FiniteGroup::symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}
BENCHMARK(BM_SubgroupLattice);

void BM_UnfactorizableSearch(benchmark::State& state) {
  auto g = FiniteGroup::alternating(5);
  for (auto _ : state) benchmark::DoNotOptimize(is_unfactorizable(g));
}
BENCHMARK(BM_UnfactorizableSearch);

}  // namespace
