#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "spacerev/space_graph.hpp"

namespace spacerev {

/// A propositional atom anchored at exactly one parcel.
struct Atom {
  VertexId parcel = 0;
  std::string name;

  auto operator<=>(const Atom&) const = default;
};

struct Literal {
  Atom atom;
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
};

/// S1 = revisable belief, S2 = protected knowledge.
enum class ClauseSource { S1, S2 };

using ClauseId = std::uint32_t;

/// A disjunction of parcel-anchored literals. Literal sets are deduplicated;
/// empty clauses and tautologies are rejected at construction (IngestError).
class Clause {
 public:
  Clause(ClauseId id, ClauseSource source, std::vector<Literal> literals);

  ClauseId id() const { return id_; }
  ClauseSource source() const { return source_; }
  const std::vector<Literal>& literals() const { return literals_; }

  /// Parcels mentioned by the clause's atoms. Sorted, non-empty.
  const std::vector<VertexId>& footprint() const { return footprint_; }

 private:
  ClauseId id_;
  ClauseSource source_;
  std::vector<Literal> literals_;   // sorted, unique
  std::vector<VertexId> footprint_; // sorted, unique
};

class KnowledgeBase {
 public:
  /// Empty base over an empty graph.
  KnowledgeBase();
  KnowledgeBase(std::shared_ptr<const SpaceGraph> graph, std::vector<Clause> clauses);

  /// Clause text format, one clause per line:
  ///   c <id> <S1|S2> <lit>...
  /// where a literal is [-]<name>@<parcel-id>, e.g. "c 7 S1 A3@4 -A4@4".
  static KnowledgeBase parse(std::istream& in, std::shared_ptr<const SpaceGraph> graph);
  static KnowledgeBase parse_file(const std::string& path,
                                  std::shared_ptr<const SpaceGraph> graph);

  const SpaceGraph& graph() const { return *graph_; }
  std::shared_ptr<const SpaceGraph> graph_ptr() const { return graph_; }

  std::size_t size() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  bool contains(ClauseId id) const { return index_.count(id) != 0; }
  const Clause& clause(ClauseId id) const;
  ClauseSource source_of(ClauseId id) const { return clause(id).source(); }

  /// All clause ids, ascending.
  std::vector<ClauseId> all_ids() const;

  /// The knowledge base with the given clauses removed (the revised base).
  KnowledgeBase without(const std::vector<ClauseId>& removed) const;

 private:
  std::shared_ptr<const SpaceGraph> graph_;
  std::vector<Clause> clauses_;
  std::unordered_map<ClauseId, std::size_t> index_;
};

/// Locality of a clause relative to one block of a blocking:
///   BClause  footprint inside the block
///   CClause  footprint inside block ∪ cover, touching both
///   QClause  footprint inside the cover only
///   NClause  anything else
enum class ClauseClass { BClause, CClause, QClause, NClause };

ClauseClass classify(const Clause& c, const Blocking& blocking, std::size_t block_index);

std::vector<ClauseId> clauses_of(const KnowledgeBase& kb, const Blocking& blocking,
                                 std::size_t block_index,
                                 const std::vector<ClauseClass>& classes);

}  // namespace spacerev
