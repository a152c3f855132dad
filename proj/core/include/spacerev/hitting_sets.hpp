#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "spacerev/consistency.hpp"
#include "spacerev/kb.hpp"

namespace spacerev {

/// A set of clause ids intersecting every conflict of the collection it was
/// computed for, with no hitting proper subset.
struct HittingSet {
  std::vector<ClauseId> clause_ids;  // sorted

  friend bool operator==(const HittingSet&, const HittingSet&) = default;
  friend auto operator<=>(const HittingSet& a, const HittingSet& b) {
    return a.clause_ids <=> b.clause_ids;
  }
};

struct HSDiagnostics {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t pruned = 0;
  std::uint64_t conflicts_used = 0;
};

struct HSTreeResult {
  std::vector<HittingSet> sets;  // sorted, unique, subset-minimal
  HSDiagnostics diag;
};

/// All minimal hitting sets of the conflict collection, via a hitting-set
/// tree over the precomputed collection. Branch labels drawn from
/// `excluded_labels` are never taken, which restricts the result to hitting
/// sets avoiding those ids (equivalent to post-filtering).
HSTreeResult hs_tree(const std::vector<Conflict>& conflicts,
                     const std::unordered_set<ClauseId>& excluded_labels = {});

/// Keeps only hitting sets made of S1 clauses. An empty result on a
/// non-empty input signals an unrepairable conflict; callers decide.
std::vector<HittingSet> filter_protected(const std::vector<HittingSet>& hs,
                                         const KnowledgeBase& kb);

/// Element-wise unions of two hitting-set families computed from clause-
/// disjoint conflict collections. Throws IndependenceViolatedError when a
/// clause id appears on both sides.
std::vector<HittingSet> combine_independent(const std::vector<HittingSet>& ha,
                                            const std::vector<HittingSet>& hb);

/// Element-wise unions across all parts followed by subset-minimization:
/// the minimal hitting sets of the union collection.
std::vector<HittingSet> combine_min_union(const std::vector<std::vector<HittingSet>>& parts);

/// Drops duplicates and strict supersets; result sorted.
std::vector<HittingSet> minimize_sets(std::vector<HittingSet> sets);

enum class PreferenceOrder { MinCardinalityLex };

/// Minimal-cardinality member, ties broken lexicographically on the sorted
/// clause ids. Throws EmptyCandidatesError on empty input.
HittingSet prefer(const std::vector<HittingSet>& hs,
                  PreferenceOrder order = PreferenceOrder::MinCardinalityLex);

}  // namespace spacerev
