#include <benchmark/benchmark.h>

#include "spacerev/flood.hpp"
#include "spacerev/revision.hpp"

namespace {

using namespace spacerev;

KnowledgeBase instance(unsigned blocks, unsigned k) {
  GeneratorParams params;
  params.parcel_count = static_cast<std::size_t>(blocks) * (k + 1);
  params.topology = Topology::Path;
  params.levels = 3;
  params.interval_density = 0.25;
  params.flux_density = 0.25;
  params.planted_conflict_size = 2;
  return compile(generate(params, 31));
}

void BM_ContainedRevision(benchmark::State& state) {
  RevisionConfig config;
  KnowledgeBase kb = instance(static_cast<unsigned>(state.range(0)), config.k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contained_revision(kb, config));
  }
}

void BM_GlobalRdr(benchmark::State& state) {
  RevisionConfig config;
  KnowledgeBase kb = instance(static_cast<unsigned>(state.range(0)), config.k);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(global_rdr(kb, config.budget, config.k_r));
    } catch (const BudgetExceededError&) {
      state.SkipWithError("enumeration budget exceeded");
      break;
    }
  }
}

}  // namespace

BENCHMARK(BM_ContainedRevision)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_GlobalRdr)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
