#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spacerev/consistency.hpp"
#include "spacerev/hitting_sets.hpp"
#include "spacerev/kb.hpp"
#include "spacerev/space_graph.hpp"

namespace spacerev {

/// Tractability gate: holds iff 3 * d_c <= k_r, where d_c is the largest
/// (observed or assumed) minimal-conflict size and k_r the largest tractable
/// neighborhood size. Advisory: revision proceeds with a warning on failure.
struct H0Report {
  unsigned d_c = 0;
  unsigned k_r = 0;
  bool holds = true;
};

H0Report check_h0(unsigned d_c, unsigned k_r);

enum class BlockRegime { SpaceIndependent, InfoIndependent, Dependent };

struct RevisionDiagnostics {
  std::uint64_t nodes_expanded = 0;       // hitting-set tree nodes, all passes
  std::uint64_t hs_pruned = 0;
  std::uint64_t mus_candidates = 0;
  std::uint64_t sat_calls = 0;
  std::uint64_t conflicts_found = 0;      // distinct conflicts solved
  std::uint64_t conflict_reencounters = 0;
  std::uint64_t base_pass_conflicts = 0;  // solved or deferred during pass 0
  std::uint64_t deferred_swept = 0;
  std::uint64_t dependent_folds = 0;      // folds that re-ran the full tree
  unsigned passes = 0;
  ShiftScheme shift_scheme = ShiftScheme::ReseedHeuristic;
  double t_partition_ms = 0.0;
  double t_detect_ms = 0.0;
  double t_fold_ms = 0.0;
  double t_total_ms = 0.0;
};

// Stable warning tokens carried in RevisionResult::warnings.
namespace warning {
inline constexpr const char* kH0Violated = "h0-violated";
inline constexpr const char* kHeuristicShifts = "heuristic-shifts";
inline constexpr const char* kThickCover = "thick-cover-shifts";
inline constexpr const char* kDeferredSwept = "deferred-conflicts-swept";
inline constexpr const char* kDisconnectedFootprint = "disconnected-conflict-footprint";
}  // namespace warning

struct RevisionResult {
  std::vector<HittingSet> global_hitting_sets;  // S1-only, minimal, sorted
  HittingSet chosen;
  KnowledgeBase revised_kb;
  std::vector<BlockRegime> regime_per_block;  // base blocking, block order
  unsigned shifts_used = 0;
  H0Report h0;
  /// True only when the engine proved the revised base consistent. The
  /// global baseline does; the contained engine never re-checks globally,
  /// that is its point, so it always reports false.
  bool conjecture_verified = false;
  std::vector<std::string> warnings;
  RevisionDiagnostics diag;
  Blocking base_blocking;  // empty for the global baseline
};

struct RevisionConfig {
  unsigned k = 2;
  unsigned kprime = 4;
  unsigned k_r = 12;
  SeedPolicy seed_policy{};
  EnumerationBudget budget{};
  unsigned jobs = 1;  // worker threads for per-block conflict detection
};

/// Unpartitioned baseline: minimal conflicts of the whole base, hitting-set
/// tree, protected filter, preference. Throws BudgetExceededError and
/// UnrepairableConflictError.
RevisionResult global_rdr(const KnowledgeBase& kb, const EnumerationBudget& budget = {},
                          unsigned k_r = 12);

/// Local revision over blocks and covers of a base partition plus its shift
/// family, folding local minimal hitting sets into a global family. Correct
/// whenever every minimal conflict fits a block-plus-cover of some processed
/// blocking (the operating assumption); detects nothing beyond that scope.
RevisionResult contained_revision(const KnowledgeBase& kb, const RevisionConfig& config);

}  // namespace spacerev
