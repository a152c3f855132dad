#include <benchmark/benchmark.h>

#include "spacerev/consistency.hpp"
#include "spacerev/flood.hpp"

namespace {

using namespace spacerev;

KnowledgeBase instance(std::size_t parcels) {
  GeneratorParams params;
  params.parcel_count = parcels;
  params.topology = Topology::Path;
  params.levels = 3;
  params.interval_density = 0.3;
  params.flux_density = 0.3;
  params.planted_conflict_size = 2;
  return compile(generate(params, 23));
}

void BM_IsConsistent(benchmark::State& state) {
  KnowledgeBase kb = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_consistent(kb));
  }
}

void BM_MinimalConflicts(benchmark::State& state) {
  KnowledgeBase kb = instance(static_cast<std::size_t>(state.range(0)));
  EnumerationBudget budget;
  budget.max_candidates = 100'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_conflicts(kb, budget));
  }
}

}  // namespace

BENCHMARK(BM_IsConsistent)->Arg(12)->Arg(24)->Arg(48);
BENCHMARK(BM_MinimalConflicts)->Arg(6)->Arg(9)->Arg(12);
