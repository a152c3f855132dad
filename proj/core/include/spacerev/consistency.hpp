#pragma once

#include <cstdint>
#include <vector>

#include "spacerev/kb.hpp"

namespace spacerev {

/// A subset-minimal inconsistent set of clauses: the set is unsatisfiable and
/// every proper subset is satisfiable.
struct Conflict {
  std::vector<ClauseId> clause_ids;  // sorted

  friend bool operator==(const Conflict&, const Conflict&) = default;
  friend auto operator<=>(const Conflict& a, const Conflict& b) {
    return a.clause_ids <=> b.clause_ids;
  }
};

/// Bounds for minimal-conflict enumeration. Hitting either bound while larger
/// conflicts may still exist raises BudgetExceededError.
struct EnumerationBudget {
  unsigned max_cardinality = 6;
  std::uint64_t max_candidates = 2'000'000;
};

struct MusStats {
  std::uint64_t candidates = 0;
  std::uint64_t sat_calls = 0;
};

bool is_consistent(const KnowledgeBase& kb);
bool is_consistent(const KnowledgeBase& kb, const std::vector<ClauseId>& subset);

/// All subset-minimal inconsistent subsets of `subset`, sorted by clause-id
/// tuples. Empty when the subset is consistent.
std::vector<Conflict> minimal_conflicts(const KnowledgeBase& kb,
                                        const std::vector<ClauseId>& subset,
                                        const EnumerationBudget& budget = {},
                                        MusStats* stats = nullptr);
std::vector<Conflict> minimal_conflicts(const KnowledgeBase& kb,
                                        const EnumerationBudget& budget = {},
                                        MusStats* stats = nullptr);

/// Spatial size of a conflict: the radius of the smallest k-neighborhood
/// containing every parcel mentioned by the conflict's clauses (the center is
/// minimized over all graph vertices). Throws DisconnectedFootprintError when
/// no vertex reaches the whole footprint.
unsigned conflict_size(const Conflict& conf, const KnowledgeBase& kb);

/// Max of conflict_size over the set; 0 for an empty set.
unsigned max_conflict_size(const std::vector<Conflict>& confs, const KnowledgeBase& kb);

}  // namespace spacerev
