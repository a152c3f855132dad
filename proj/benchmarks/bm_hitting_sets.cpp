#include <benchmark/benchmark.h>

#include <random>

#include "spacerev/hitting_sets.hpp"

namespace {

using namespace spacerev;

std::vector<Conflict> random_collection(std::mt19937_64& rng, std::size_t count,
                                        std::uint32_t universe) {
  std::vector<Conflict> out;
  for (std::size_t i = 0; i < count; ++i) {
    Conflict c;
    std::size_t width = 1 + rng() % 4;
    while (c.clause_ids.size() < width) {
      ClauseId e = static_cast<ClauseId>(rng() % universe);
      if (std::find(c.clause_ids.begin(), c.clause_ids.end(), e) == c.clause_ids.end()) {
        c.clause_ids.push_back(e);
      }
    }
    std::sort(c.clause_ids.begin(), c.clause_ids.end());
    out.push_back(std::move(c));
  }
  return out;
}

void BM_HsTree(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto conflicts = random_collection(rng, static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs_tree(conflicts));
  }
}

}  // namespace

BENCHMARK(BM_HsTree)->Arg(4)->Arg(6)->Arg(8);
