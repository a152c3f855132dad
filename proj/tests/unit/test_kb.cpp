#include <random>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "spacerev/kb.hpp"

using namespace spacerev;

TEST_SUITE_BEGIN("kb-core");

namespace {

Clause make_clause(ClauseId id, ClauseSource src,
                   std::initializer_list<std::pair<const char*, VertexId>> pos,
                   std::initializer_list<std::pair<const char*, VertexId>> neg = {}) {
  std::vector<Literal> lits;
  for (auto [name, parcel] : pos) lits.push_back({Atom{parcel, name}, true});
  for (auto [name, parcel] : neg) lits.push_back({Atom{parcel, name}, false});
  return Clause(id, src, std::move(lits));
}

}  // namespace

TEST_CASE("clause text format") {
  auto g = testgen::path_graph(6);
  std::istringstream in(
      "# beliefs\n"
      "c 7 S1 A3@4 -A4@4\n"
      "c 8 S2 P@1 Q@2 -R@3\n");
  KnowledgeBase kb = KnowledgeBase::parse(in, g);
  REQUIRE(kb.size() == 2);
  const Clause& c7 = kb.clause(7);
  CHECK(c7.source() == ClauseSource::S1);
  REQUIRE(c7.literals().size() == 2);
  CHECK(c7.footprint() == std::vector<VertexId>{4});
  CHECK(kb.clause(8).footprint() == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("clause ingest rejections") {
  auto g = testgen::path_graph(3);
  auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return KnowledgeBase::parse(in, g);
  };
  CHECK_THROWS_AS(parse("c 0 S1 P@0 -P@0\n"), IngestError);   // tautology
  CHECK_THROWS_AS(parse("c 0 S1\n"), IngestError);            // empty clause
  CHECK_THROWS_AS(parse("c 0 S1 P@0\nc 0 S1 Q@1\n"), IngestError);  // dup id
  CHECK_THROWS_AS(parse("c 0 S1 P@9\n"), IngestError);        // unknown parcel
  CHECK_THROWS_AS(parse("c 0 S3 P@0\n"), ParseError);         // bad source
  CHECK_THROWS_AS(parse("c 0 S1 P\n"), ParseError);           // no parcel
  CHECK_THROWS_AS(parse("x 0 S1 P@0\n"), ParseError);         // bad construct
}

TEST_CASE("duplicate literals collapse") {
  Clause c = make_clause(0, ClauseSource::S1, {{"P", 2}, {"P", 2}});
  CHECK(c.literals().size() == 1);
}

TEST_CASE("footprint reads off the atoms") {
  CHECK(make_clause(0, ClauseSource::S1, {{"P", 3}}, {{"Q", 3}}).footprint() ==
        std::vector<VertexId>{3});
  CHECK(make_clause(1, ClauseSource::S1, {{"P", 1}}, {{"Pp", 4}}).footprint() ==
        std::vector<VertexId>{1, 4});
  CHECK(make_clause(2, ClauseSource::S1, {{"P", 5}, {"Q", 5}}).footprint() ==
        std::vector<VertexId>{5});
}

TEST_CASE("classification against a path blocking") {
  auto g = testgen::path_graph(9);
  Blocking b = partition(*g, 1, 2);  // blocks {0,1},{2,3},... cover0 {2}

  auto cls = [&](const Clause& c, std::size_t i) { return classify(c, b, i); };
  CHECK(cls(make_clause(0, ClauseSource::S1, {{"P", 0}, {"Q", 1}}), 0) ==
        ClauseClass::BClause);
  CHECK(cls(make_clause(1, ClauseSource::S1, {{"P", 1}, {"Q", 2}}), 0) ==
        ClauseClass::CClause);
  CHECK(cls(make_clause(2, ClauseSource::S1, {{"P", 2}}), 0) == ClauseClass::QClause);
  CHECK(cls(make_clause(3, ClauseSource::S1, {{"P", 5}}), 0) == ClauseClass::NClause);
  CHECK_THROWS_AS((void)cls(make_clause(4, ClauseSource::S1, {{"P", 0}}), 99),
                  BadIndexError);
}

TEST_CASE("classification is a partition and block-locality is exclusive") {
  std::mt19937_64 rng(0xC1A55);
  for (int round = 0; round < 30; ++round) {
    std::size_t n = 3 + testgen::pick(rng, 10);
    auto g = testgen::random_graph(rng, n, testgen::pick(rng, n));
    unsigned k = static_cast<unsigned>(testgen::pick(rng, 3));
    unsigned kprime = k + 1 + static_cast<unsigned>(testgen::pick(rng, 2));
    Blocking b = partition(*g, k, kprime);
    auto clauses = testgen::random_clauses(rng, *g, 8, 6);
    KnowledgeBase kb(g, clauses);

    for (const Clause& c : kb.clauses()) {
      std::size_t b_count = 0;
      for (std::size_t i = 0; i < b.block_count(); ++i) {
        ClauseClass cls = classify(c, b, i);
        // Exactly one class per (clause, block): the enum result is total.
        if (cls == ClauseClass::BClause) ++b_count;
      }
      // A clause fully inside a block cannot be B- or C-classified elsewhere.
      if (b_count > 0) {
        CHECK(b_count == 1);
        for (std::size_t i = 0; i < b.block_count(); ++i) {
          ClauseClass cls = classify(c, b, i);
          if (cls != ClauseClass::BClause) {
            CHECK((cls == ClauseClass::NClause || cls == ClauseClass::QClause));
          }
        }
      }
    }
  }
}

TEST_CASE("clauses_of selects by class") {
  auto g = testgen::path_graph(9);
  Blocking b = partition(*g, 1, 2);
  std::vector<Clause> clauses;
  clauses.push_back(make_clause(0, ClauseSource::S1, {{"P", 0}, {"Q", 1}}));  // B at 0
  clauses.push_back(make_clause(1, ClauseSource::S1, {{"P", 1}, {"Q", 2}}));  // C at 0
  clauses.push_back(make_clause(2, ClauseSource::S1, {{"P", 2}}));            // Q at 0
  clauses.push_back(make_clause(3, ClauseSource::S1, {{"P", 6}}));            // N at 0
  KnowledgeBase kb(g, clauses);

  CHECK(clauses_of(kb, b, 0, {ClauseClass::BClause}) == std::vector<ClauseId>{0});
  auto local = clauses_of(
      kb, b, 0, {ClauseClass::BClause, ClauseClass::CClause, ClauseClass::QClause});
  CHECK(local == std::vector<ClauseId>{0, 1, 2});

  // Cross-check: exactly the clauses whose footprint sits inside block ∪ cover.
  for (const Clause& c : kb.clauses()) {
    bool inside = true;
    for (VertexId v : c.footprint()) {
      bool in_block = std::binary_search(b.blocks[0].begin(), b.blocks[0].end(), v);
      bool in_cover = std::binary_search(b.covers[0].begin(), b.covers[0].end(), v);
      if (!in_block && !in_cover) inside = false;
    }
    bool selected = std::find(local.begin(), local.end(), c.id()) != local.end();
    CHECK(selected == inside);
  }

  KnowledgeBase empty(g, {});
  CHECK(clauses_of(empty, b, 0, {ClauseClass::BClause}).empty());
  CHECK_THROWS_AS((void)clauses_of(kb, b, 42, {ClauseClass::BClause}), BadIndexError);
}

TEST_CASE("whole kb in one block") {
  SpaceGraph k3({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  auto g = std::make_shared<SpaceGraph>(k3);
  Blocking b = partition(*g, 1, 2);
  REQUIRE(b.block_count() == 1);
  std::vector<Clause> clauses;
  for (ClauseId i = 0; i < 4; ++i) {
    clauses.push_back(make_clause(i, ClauseSource::S1, {{"P", static_cast<VertexId>(i % 3)}}));
  }
  KnowledgeBase kb(g, clauses);
  CHECK(clauses_of(kb, b, 0, {ClauseClass::BClause}).size() == kb.size());
}

TEST_SUITE_END();
