#include <random>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "spacerev/flood.hpp"
#include "spacerev/revision.hpp"

using namespace spacerev;

TEST_SUITE_BEGIN("revision");

namespace {

Clause unit(ClauseId id, const char* name, VertexId parcel, bool positive,
            ClauseSource src = ClauseSource::S1) {
  return Clause(id, src, {Literal{Atom{parcel, name}, positive}});
}

// Two blocks of four and three parcels whose union hides a boundary
// conflict: the flux chain 3 -> 4 -> 5 with incompatible end intervals is
// invisible to every base block-plus-cover but caught by a shifted blocking.
FloodScenario boundary_scenario() {
  FloodScenario s;
  s.graph = testgen::path_graph(7);
  s.levels = 3;
  s.intervals[3] = {0, 1};
  s.intervals[5] = {2, 2};
  s.fluxes = {{3, 4}, {4, 5}};
  s.validate();
  return s;
}

}  // namespace

TEST_CASE("h0 gate") {
  CHECK(check_h0(2, 6).holds);        // 3*2 == 6
  CHECK_FALSE(check_h0(3, 6).holds);  // 9 > 6
  CHECK(check_h0(0, 0).holds);
  CHECK(check_h0(0, 17).holds);
  CHECK_FALSE(check_h0(2, 5).holds);
  CHECK(check_h0(4, 12).holds);
  CHECK_FALSE(check_h0(4, 11).holds);
}

TEST_CASE("global baseline on trivial bases") {
  auto g = testgen::path_graph(3);

  KnowledgeBase consistent(g, {unit(0, "p", 0, true), unit(1, "q", 1, true)});
  RevisionResult r = global_rdr(consistent);
  CHECK(r.chosen.clause_ids.empty());
  CHECK(r.revised_kb.size() == 2);
  CHECK(r.conjecture_verified);
  CHECK(r.h0.d_c == 0);

  KnowledgeBase protected_pair(
      g, {unit(0, "p", 0, true), unit(1, "p", 0, false, ClauseSource::S2)});
  RevisionResult rp = global_rdr(protected_pair);
  CHECK(rp.chosen.clause_ids == std::vector<ClauseId>{0});
  CHECK(is_consistent(rp.revised_kb));

  // Tie between {0} and {1}: lexicographic preference takes the smaller id.
  KnowledgeBase tie(g, {unit(0, "p", 0, true), unit(1, "p", 0, false)});
  CHECK(global_rdr(tie).chosen.clause_ids == std::vector<ClauseId>{0});
}

TEST_CASE("global baseline reports unrepairable conflicts") {
  auto g = testgen::path_graph(2);
  KnowledgeBase kb(g, {unit(0, "p", 0, true, ClauseSource::S2),
                       unit(1, "p", 0, false, ClauseSource::S2)});
  CHECK_THROWS_AS((void)global_rdr(kb), UnrepairableConflictError);
}

TEST_CASE("contained revision on a consistent base") {
  FloodScenario s;
  s.graph = testgen::path_graph(9);
  s.levels = 3;
  s.intervals[1] = {0, 1};
  s.intervals[6] = {1, 2};
  KnowledgeBase kb = compile(s);
  REQUIRE(is_consistent(kb));

  RevisionConfig config;
  config.k = 1;
  config.kprime = 2;
  RevisionResult r = contained_revision(kb, config);
  CHECK(r.chosen.clause_ids.empty());
  CHECK(r.global_hitting_sets.size() == 1);
  CHECK(r.shifts_used == 2);
  for (BlockRegime regime : r.regime_per_block) {
    CHECK(regime == BlockRegime::SpaceIndependent);
  }
  CHECK_FALSE(r.conjecture_verified);
}

TEST_CASE("boundary conflict is missed by the base pass and caught by a shift") {
  KnowledgeBase kb = compile(boundary_scenario());
  REQUIRE_FALSE(is_consistent(kb));

  RevisionConfig config;
  config.k = 3;
  config.kprime = 4;
  RevisionResult contained = contained_revision(kb, config);

  // Base pass blocks: {0..3} and {4..6}; each block ∪ cover is locally
  // consistent so the base pass sees nothing.
  REQUIRE(contained.base_blocking.block_count() == 2);
  CHECK(contained.base_blocking.blocks[0].size() == 4);
  CHECK(contained.base_blocking.blocks[1].size() == 3);
  CHECK(contained.diag.base_pass_conflicts == 0);
  CHECK(contained.diag.conflicts_found > 0);
  CHECK_FALSE(contained.chosen.clause_ids.empty());

  RevisionResult global = global_rdr(kb);
  CHECK(contained.global_hitting_sets == global.global_hitting_sets);
  CHECK(contained.chosen == global.chosen);
  CHECK(is_consistent(contained.revised_kb));
}

TEST_CASE("contained equals global on random contained instances") {
  std::mt19937_64 rng(0xCAFE);
  int rounds = 0;
  for (std::uint64_t seed = 1; rounds < 25; ++seed) {
    GeneratorParams params;
    params.parcel_count = 6 + testgen::pick(rng, 5);
    params.topology = Topology::Path;
    params.levels = 3;
    params.interval_density = 0.3;
    params.flux_density = 0.2;
    params.planted_conflict_size = 1 + testgen::pick(rng, 2);
    FloodScenario s = generate(params, seed);
    KnowledgeBase kb = compile(s);

    RevisionConfig config;
    config.k = 2;
    config.kprime = 4;
    RevisionResult global = global_rdr(kb, config.budget, config.k_r);
    if (global.h0.d_c > config.kprime - config.k) continue;  // outside scope
    ++rounds;
    RevisionResult contained = contained_revision(kb, config);
    CAPTURE(seed);
    CHECK(contained.global_hitting_sets == global.global_hitting_sets);
    CHECK(contained.chosen == global.chosen);
    CHECK(is_consistent(contained.revised_kb));
    CHECK(contained.h0.d_c == global.h0.d_c);
  }
}

TEST_CASE("parallel detection matches sequential") {
  GeneratorParams params;
  params.parcel_count = 12;
  params.topology = Topology::Path;
  params.levels = 3;
  params.interval_density = 0.4;
  params.flux_density = 0.3;
  params.planted_conflict_size = 2;
  KnowledgeBase kb = compile(generate(params, 7));

  RevisionConfig serial;
  serial.jobs = 1;
  RevisionConfig parallel;
  parallel.jobs = 4;
  RevisionResult a = contained_revision(kb, serial);
  RevisionResult b = contained_revision(kb, parallel);
  CHECK(a.global_hitting_sets == b.global_hitting_sets);
  CHECK(a.chosen == b.chosen);
  CHECK(a.diag.conflicts_found == b.diag.conflicts_found);
}

TEST_CASE("oversized conflicts may slip through, honestly") {
  // One minimal conflict of spatial size 2 with covers of thickness 1: the
  // contained engine must finish, report nothing proved, and may leave the
  // base inconsistent. The chain 2 -> 3 -> 4 -> 5 sits where no block ∪
  // cover of the base or either shift reaches all four parcels.
  FloodScenario s;
  s.graph = testgen::path_graph(9);
  s.levels = 3;
  s.intervals[2] = {0, 1};
  s.intervals[5] = {2, 2};
  s.fluxes = {{2, 3}, {3, 4}, {4, 5}};
  KnowledgeBase kb = compile(s);
  REQUIRE_FALSE(is_consistent(kb));

  RevisionConfig config;
  config.k = 1;
  config.kprime = 2;
  RevisionResult r = contained_revision(kb, config);
  CHECK_FALSE(r.conjecture_verified);
  CHECK(r.chosen.clause_ids.empty());
  CHECK_FALSE(is_consistent(r.revised_kb));

  RevisionResult global = global_rdr(kb, config.budget, config.k_r);
  CHECK_FALSE(global.chosen.clause_ids.empty());
  CHECK(global.h0.d_c == 2);
}

TEST_CASE("h0 violations warn but do not stop the run") {
  GeneratorParams params;
  params.parcel_count = 9;
  params.topology = Topology::Path;
  params.levels = 3;
  params.planted_conflict_size = 2;
  KnowledgeBase kb = compile(generate(params, 11));

  RevisionConfig config;
  config.k = 2;
  config.kprime = 4;
  config.k_r = 5;  // 3 * 2 > 5
  RevisionResult r = contained_revision(kb, config);
  CHECK_FALSE(r.h0.holds);
  CHECK(std::find(r.warnings.begin(), r.warnings.end(), warning::kH0Violated) !=
        r.warnings.end());
  CHECK_FALSE(r.chosen.clause_ids.empty());
}

TEST_CASE("budget errors propagate out of contained revision") {
  GeneratorParams params;
  params.parcel_count = 9;
  params.topology = Topology::Path;
  params.levels = 3;
  params.planted_conflict_size = 2;  // cardinality 5 conflict
  KnowledgeBase kb = compile(generate(params, 5));

  RevisionConfig config;
  config.k = 2;
  config.kprime = 4;
  config.budget.max_cardinality = 3;
  CHECK_THROWS_AS((void)contained_revision(kb, config), BudgetExceededError);
}

TEST_CASE("protected-only conflicts are unrepairable in both engines") {
  auto g = testgen::path_graph(4);
  KnowledgeBase kb(g, {unit(0, "p", 1, true, ClauseSource::S2),
                       unit(1, "p", 1, false, ClauseSource::S2),
                       unit(2, "q", 2, true)});
  CHECK_THROWS_AS((void)global_rdr(kb), UnrepairableConflictError);
  RevisionConfig config;
  config.k = 1;
  config.kprime = 2;
  CHECK_THROWS_AS((void)contained_revision(kb, config), UnrepairableConflictError);
}

TEST_CASE("processed conflicts are solved exactly once") {
  KnowledgeBase kb = compile(boundary_scenario());
  RevisionConfig config;
  config.k = 3;
  config.kprime = 4;
  RevisionResult r = contained_revision(kb, config);
  // Re-encounters across shift passes are skipped, never re-folded: the
  // distinct solved count matches the global collection size.
  RevisionResult global = global_rdr(kb);
  CHECK(r.diag.conflicts_found == global.diag.conflicts_found);
}

TEST_SUITE_END();
