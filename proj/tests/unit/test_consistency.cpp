#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "spacerev/consistency.hpp"

using namespace spacerev;

TEST_SUITE_BEGIN("consistency");

namespace {

Clause unit(ClauseId id, const char* name, VertexId parcel, bool positive,
            ClauseSource src = ClauseSource::S1) {
  return Clause(id, src, {Literal{Atom{parcel, name}, positive}});
}

KnowledgeBase tiny_kb(std::vector<Clause> clauses, std::size_t parcels = 3) {
  return KnowledgeBase(testgen::path_graph(parcels), std::move(clauses));
}

}  // namespace

TEST_CASE("is_consistent basics") {
  KnowledgeBase contradiction = tiny_kb({unit(0, "p", 0, true), unit(1, "p", 0, false)});
  CHECK_FALSE(is_consistent(contradiction));

  KnowledgeBase empty = tiny_kb({});
  CHECK(is_consistent(empty));

  // {p ∨ q}, {¬p}, {¬q}
  std::vector<Clause> clauses;
  clauses.push_back(Clause(0, ClauseSource::S1,
                           {Literal{Atom{0, "p"}, true}, Literal{Atom{0, "q"}, true}}));
  clauses.push_back(unit(1, "p", 0, false));
  clauses.push_back(unit(2, "q", 0, false));
  CHECK_FALSE(is_consistent(tiny_kb(std::move(clauses))));
}

TEST_CASE("minimal_conflicts extracts minimal cores") {
  KnowledgeBase kb = tiny_kb({unit(0, "p", 0, true), unit(1, "p", 0, false),
                              unit(2, "q", 1, true)});
  auto conflicts = minimal_conflicts(kb);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0].clause_ids == std::vector<ClauseId>{0, 1});
}

TEST_CASE("three-clause chain conflict") {
  // {p}, {¬p ∨ q}, {¬q}: all three clauses form the only minimal conflict.
  std::vector<Clause> clauses;
  clauses.push_back(unit(0, "p", 0, true));
  clauses.push_back(Clause(1, ClauseSource::S1,
                           {Literal{Atom{0, "p"}, false}, Literal{Atom{1, "q"}, true}}));
  clauses.push_back(unit(2, "q", 1, false));
  KnowledgeBase kb = tiny_kb(std::move(clauses));

  auto expected = oracle::minimal_unsat_subsets(kb.clauses());
  REQUIRE(expected.size() == 1);
  CHECK(expected[0] == std::vector<ClauseId>{0, 1, 2});

  auto conflicts = minimal_conflicts(kb);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0].clause_ids == expected[0]);
}

TEST_CASE("consistent input yields no conflicts") {
  KnowledgeBase kb = tiny_kb({unit(0, "p", 0, true), unit(1, "q", 1, true)});
  CHECK(minimal_conflicts(kb).empty());
}

TEST_CASE("enumeration equals the truth-table oracle") {
  std::mt19937_64 rng(0xDECAF);
  EnumerationBudget full;
  full.max_cardinality = 12;
  for (int round = 0; round < 60; ++round) {
    std::size_t n = 1 + testgen::pick(rng, 10);
    auto g = testgen::random_graph(rng, 4, 2);
    auto clauses = testgen::random_clauses(rng, *g, n, 1 + testgen::pick(rng, 7));
    KnowledgeBase kb(g, clauses);
    auto expected = oracle::minimal_unsat_subsets(kb.clauses());
    auto got = minimal_conflicts(kb, full);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].clause_ids == expected[i]);
    }
  }
}

TEST_CASE("returned conflicts are minimal and survive clause addition") {
  std::mt19937_64 rng(0xF00D);
  EnumerationBudget full;
  full.max_cardinality = 12;
  for (int round = 0; round < 25; ++round) {
    auto g = testgen::random_graph(rng, 4, 2);
    auto clauses = testgen::random_clauses(rng, *g, 6 + testgen::pick(rng, 4), 5);
    KnowledgeBase kb(g, clauses);
    auto conflicts = minimal_conflicts(kb, full);
    for (const Conflict& conf : conflicts) {
      CHECK_FALSE(is_consistent(kb, conf.clause_ids));
      for (ClauseId dropped : conf.clause_ids) {
        std::vector<ClauseId> rest;
        for (ClauseId id : conf.clause_ids) {
          if (id != dropped) rest.push_back(id);
        }
        CHECK(is_consistent(kb, rest));
      }
    }

    // Adding clauses never removes an existing minimal conflict.
    auto extra = testgen::random_clauses(rng, *g, 2, 5);
    std::vector<Clause> grown = clauses;
    for (const Clause& c : extra) {
      grown.emplace_back(static_cast<ClauseId>(100 + c.id()), c.source(), c.literals());
    }
    KnowledgeBase bigger(g, grown);
    auto grown_conflicts = minimal_conflicts(bigger, full);
    for (const Conflict& conf : conflicts) {
      CHECK(std::find(grown_conflicts.begin(), grown_conflicts.end(), conf) !=
            grown_conflicts.end());
    }
  }
}

TEST_CASE("budgets surface instead of truncating") {
  // Four units whose only conflict has cardinality 4.
  std::vector<Clause> clauses;
  clauses.push_back(unit(0, "a", 0, true));
  clauses.push_back(Clause(1, ClauseSource::S1,
                           {Literal{Atom{0, "a"}, false}, Literal{Atom{1, "b"}, true}}));
  clauses.push_back(Clause(2, ClauseSource::S1,
                           {Literal{Atom{1, "b"}, false}, Literal{Atom{2, "c"}, true}}));
  clauses.push_back(unit(3, "c", 2, false));
  KnowledgeBase kb = tiny_kb(std::move(clauses));

  EnumerationBudget tight;
  tight.max_cardinality = 3;
  CHECK_THROWS_AS((void)minimal_conflicts(kb, tight), BudgetExceededError);

  EnumerationBudget starved;
  starved.max_candidates = 3;
  CHECK_THROWS_AS((void)minimal_conflicts(kb, starved), BudgetExceededError);

  EnumerationBudget enough;
  enough.max_cardinality = 4;
  CHECK(minimal_conflicts(kb, enough).size() == 1);

  // A small cardinality bound is fine when all real conflicts fit under it.
  KnowledgeBase small = tiny_kb({unit(0, "p", 0, true), unit(1, "p", 0, false),
                                 unit(2, "q", 1, true), unit(3, "r", 2, true)});
  EnumerationBudget two;
  two.max_cardinality = 2;
  CHECK(minimal_conflicts(small, two).size() == 1);
}

TEST_CASE("conflict size measures the smallest containing neighborhood") {
  auto g5 = testgen::path_graph(5);

  KnowledgeBase at_one_parcel(g5, {unit(0, "p", 2, true), unit(1, "p", 2, false)});
  CHECK(conflict_size(Conflict{{0, 1}}, at_one_parcel) == 0);

  KnowledgeBase spread3(g5, {unit(0, "p", 0, true), unit(1, "q", 2, true)});
  CHECK(conflict_size(Conflict{{0, 1}}, spread3) == 1);  // center vertex 1

  KnowledgeBase spread5(g5, {unit(0, "p", 0, true), unit(1, "q", 4, true)});
  CHECK(conflict_size(Conflict{{0, 1}}, spread5) == 2);

  auto disconnected = std::make_shared<SpaceGraph>(
      std::vector<VertexId>{0, 1, 2, 3},
      std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {2, 3}});
  KnowledgeBase split(disconnected, {unit(0, "p", 0, true), unit(1, "q", 3, true)});
  CHECK_THROWS_AS((void)conflict_size(Conflict{{0, 1}}, split),
                  DisconnectedFootprintError);
}

TEST_CASE("conflict size never exceeds the graph radius") {
  std::mt19937_64 rng(0xBEEF);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = 2 + testgen::pick(rng, 8);
    auto g = testgen::random_graph(rng, n, 0);  // tree: connected
    unsigned radius = ~0u;
    for (VertexId v : g->vertices()) {
      unsigned ecc = 0;
      for (unsigned d : g->bfs_distances(v)) ecc = std::max(ecc, d);
      radius = std::min(radius, ecc);
    }
    auto clauses = testgen::random_clauses(rng, *g, 4, 4);
    KnowledgeBase kb(g, clauses);
    std::vector<ClauseId> all = kb.all_ids();
    CHECK(conflict_size(Conflict{all}, kb) <= radius);
  }
}

TEST_CASE("max_conflict_size") {
  auto g = testgen::path_graph(5);
  KnowledgeBase kb(g, {unit(0, "p", 0, true), unit(1, "q", 4, true),
                       unit(2, "r", 2, true), unit(3, "s", 2, false)});
  CHECK(max_conflict_size({}, kb) == 0);
  std::vector<Conflict> confs{Conflict{{2, 3}}, Conflict{{0, 2}}, Conflict{{0, 1}}};
  CHECK(max_conflict_size(confs, kb) == 2);
  CHECK(max_conflict_size({Conflict{{0, 2}}}, kb) == 1);
}

TEST_SUITE_END();
