#include "spacerev/revision.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace spacerev {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::unordered_set<ClauseId> protected_ids(const KnowledgeBase& kb) {
  std::unordered_set<ClauseId> out;
  for (const Clause& c : kb.clauses()) {
    if (c.source() == ClauseSource::S2) out.insert(c.id());
  }
  return out;
}

// d_c over the conflicts actually seen: a lower bound on the true maximum.
unsigned observed_dc(const std::vector<Conflict>& conflicts, const KnowledgeBase& kb,
                     std::vector<std::string>& warnings) {
  unsigned dc = 0;
  bool disconnected = false;
  for (const Conflict& conf : conflicts) {
    try {
      dc = std::max(dc, conflict_size(conf, kb));
    } catch (const DisconnectedFootprintError&) {
      disconnected = true;
    }
  }
  if (disconnected) warnings.push_back(warning::kDisconnectedFootprint);
  return dc;
}

void add_warning(std::vector<std::string>& warnings, const char* token) {
  if (std::find(warnings.begin(), warnings.end(), token) == warnings.end()) {
    warnings.push_back(token);
  }
}

struct BlockDetection {
  std::vector<ClauseId> local_ids;
  std::vector<Conflict> conflicts;
  MusStats stats;
};

// Per-block conflict detection for one blocking pass. Detection is pure, so
// blocks can run on worker threads; results come back in block order.
std::vector<BlockDetection> detect_pass(const KnowledgeBase& kb, const Blocking& blocking,
                                        const EnumerationBudget& budget, unsigned jobs) {
  std::size_t blocks = blocking.block_count();
  std::vector<BlockDetection> results(blocks);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        BlockDetection det;
        det.local_ids = clauses_of(kb, blocking, i,
                                   {ClauseClass::BClause, ClauseClass::CClause,
                                    ClauseClass::QClause});
        det.conflicts = minimal_conflicts(kb, det.local_ids, budget, &det.stats);
        results[i] = std::move(det);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  unsigned workers = std::max(1u, jobs);
  if (workers <= 1 || blocks <= 1) {
    work(0, blocks);
  } else {
    workers = std::min<unsigned>(workers, blocks);
    std::vector<std::thread> pool;
    std::size_t chunk = (blocks + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(blocks, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

BlockRegime block_regime(const std::vector<Conflict>& conflicts, const KnowledgeBase& kb,
                         const Blocking& blocking, std::size_t block_index) {
  bool any_c_conflict = false;
  std::vector<const Conflict*> with_c, b_only;
  for (const Conflict& conf : conflicts) {
    bool has_c = false, all_b = true;
    for (ClauseId id : conf.clause_ids) {
      ClauseClass cls = classify(kb.clause(id), blocking, block_index);
      if (cls == ClauseClass::CClause) has_c = true;
      if (cls != ClauseClass::BClause) all_b = false;
    }
    if (has_c) {
      any_c_conflict = true;
      with_c.push_back(&conf);
    }
    if (all_b) b_only.push_back(&conf);
  }
  if (!any_c_conflict) return BlockRegime::SpaceIndependent;
  for (const Conflict* c : with_c) {
    for (const Conflict* b : b_only) {
      std::vector<ClauseId> inter;
      std::set_intersection(c->clause_ids.begin(), c->clause_ids.end(),
                            b->clause_ids.begin(), b->clause_ids.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return BlockRegime::Dependent;
    }
  }
  return BlockRegime::InfoIndependent;
}

// Folds one block's hitting sets into the running global family. Disjoint
// collections use the element-wise-union-then-minimize rule; overlapping
// ones recompute the tree over every conflict folded so far.
struct GlobalFold {
  const std::unordered_set<ClauseId>& excluded;
  std::vector<HittingSet> hglobal{HittingSet{}};
  std::vector<Conflict> folded;
  std::set<ClauseId> folded_ids;
  RevisionDiagnostics* diag;

  void fold(const std::vector<Conflict>& new_conflicts) {
    if (new_conflicts.empty()) return;
    bool overlap = false;
    for (const Conflict& conf : new_conflicts) {
      for (ClauseId id : conf.clause_ids) {
        if (folded_ids.count(id) != 0) {
          overlap = true;
          break;
        }
      }
      if (overlap) break;
    }
    for (const Conflict& conf : new_conflicts) {
      folded.push_back(conf);
      folded_ids.insert(conf.clause_ids.begin(), conf.clause_ids.end());
    }
    if (!overlap) {
      HSTreeResult local = hs_tree(new_conflicts, excluded);
      diag->nodes_expanded += local.diag.nodes_expanded;
      diag->hs_pruned += local.diag.pruned;
      if (local.sets.empty()) throw_unrepairable(new_conflicts);
      hglobal = combine_min_union({hglobal, local.sets});
    } else {
      ++diag->dependent_folds;
      HSTreeResult whole = hs_tree(folded, excluded);
      diag->nodes_expanded += whole.diag.nodes_expanded;
      diag->hs_pruned += whole.diag.pruned;
      if (whole.sets.empty()) throw_unrepairable(new_conflicts);
      hglobal = std::move(whole.sets);
    }
  }

  [[noreturn]] static void throw_unrepairable(const std::vector<Conflict>& conflicts) {
    std::string ids;
    for (const Conflict& conf : conflicts) {
      for (ClauseId id : conf.clause_ids) {
        ids += (ids.empty() ? "" : ",") + std::to_string(id);
      }
    }
    throw UnrepairableConflictError(
        "a conflict admits no belief-only repair (clauses " + ids + ")");
  }
};

}  // namespace

H0Report check_h0(unsigned d_c, unsigned k_r) {
  H0Report report;
  report.d_c = d_c;
  report.k_r = k_r;
  report.holds = 3ull * d_c <= k_r;
  return report;
}

RevisionResult global_rdr(const KnowledgeBase& kb, const EnumerationBudget& budget,
                          unsigned k_r) {
  auto start = Clock::now();
  MusStats stats;
  std::vector<Conflict> conflicts = minimal_conflicts(kb, budget, &stats);
  HSTreeResult tree = hs_tree(conflicts);
  std::vector<HittingSet> filtered = filter_protected(tree.sets, kb);
  if (filtered.empty()) {
    GlobalFold::throw_unrepairable(conflicts);
  }
  HittingSet chosen = prefer(filtered);

  RevisionResult result{
      .global_hitting_sets = std::move(filtered),
      .chosen = chosen,
      .revised_kb = kb.without(chosen.clause_ids),
      .regime_per_block = {},
      .shifts_used = 0,
      .h0 = {},
      .conjecture_verified = true,
      .warnings = {},
      .diag = {},
      .base_blocking = {},
  };
  result.h0 = check_h0(observed_dc(conflicts, kb, result.warnings), k_r);
  if (!result.h0.holds) add_warning(result.warnings, warning::kH0Violated);
  result.diag.nodes_expanded = tree.diag.nodes_expanded;
  result.diag.hs_pruned = tree.diag.pruned;
  result.diag.mus_candidates = stats.candidates;
  result.diag.sat_calls = stats.sat_calls;
  result.diag.conflicts_found = conflicts.size();
  result.diag.t_total_ms = ms_since(start);
  return result;
}

RevisionResult contained_revision(const KnowledgeBase& kb, const RevisionConfig& config) {
  auto start = Clock::now();
  RevisionDiagnostics diag;
  std::vector<std::string> warnings;

  auto t_part = Clock::now();
  Blocking base = partition(kb.graph(), config.k, config.kprime, config.seed_policy);
  ShiftFamily family = shift_blockings(kb.graph(), base);
  diag.t_partition_ms = ms_since(t_part);
  diag.shift_scheme = family.scheme;
  if (family.scheme == ShiftScheme::ReseedHeuristic) {
    add_warning(warnings, warning::kHeuristicShifts);
  }
  if (config.kprime - config.k > config.k) {
    // Cover thicker than the block radius: the fixed-size shift family cannot
    // reach every window of the conjecture's scope on long graphs.
    add_warning(warnings, warning::kThickCover);
  }

  const std::unordered_set<ClauseId> excluded = protected_ids(kb);
  GlobalFold fold{excluded, {HittingSet{}}, {}, {}, &diag};

  std::set<std::vector<ClauseId>> solved;    // Conf of the processed conflicts
  std::map<std::vector<ClauseId>, Conflict> deferred;  // q-clause-only so far

  std::vector<BlockRegime> regime_per_block;
  std::vector<const Blocking*> passes;
  passes.push_back(&base);
  for (const Blocking& member : family.members) passes.push_back(&member);

  for (std::size_t pass = 0; pass < passes.size(); ++pass) {
    const Blocking& blocking = *passes[pass];
    ++diag.passes;

    auto t_detect = Clock::now();
    std::vector<BlockDetection> detections =
        detect_pass(kb, blocking, config.budget, config.jobs);
    diag.t_detect_ms += ms_since(t_detect);

    auto t_fold = Clock::now();
    for (std::size_t i = 0; i < detections.size(); ++i) {
      const BlockDetection& det = detections[i];
      diag.mus_candidates += det.stats.candidates;
      diag.sat_calls += det.stats.sat_calls;

      std::vector<Conflict> fresh;
      for (const Conflict& conf : det.conflicts) {
        if (solved.count(conf.clause_ids) != 0) {
          ++diag.conflict_reencounters;
          continue;
        }
        bool q_only = true;
        for (ClauseId id : conf.clause_ids) {
          if (classify(kb.clause(id), blocking, i) != ClauseClass::QClause) {
            q_only = false;
            break;
          }
        }
        if (q_only) {
          // Belongs to some other block's interior; it will be claimed there
          // or swept at the end.
          deferred.emplace(conf.clause_ids, conf);
          if (pass == 0) ++diag.base_pass_conflicts;
          continue;
        }
        solved.insert(conf.clause_ids);
        deferred.erase(conf.clause_ids);
        fresh.push_back(conf);
        ++diag.conflicts_found;
        if (pass == 0) ++diag.base_pass_conflicts;
      }
      if (pass == 0) {
        regime_per_block.push_back(block_regime(det.conflicts, kb, blocking, i));
      }
      fold.fold(fresh);
    }
    diag.t_fold_ms += ms_since(t_fold);
  }

  // Deferred conflicts that no block of any pass claimed with a b- or
  // c-clause. Solving them here keeps the fold complete over everything the
  // passes detected.
  for (const auto& [ids, conf] : deferred) {
    if (solved.count(ids) != 0) continue;
    solved.insert(ids);
    fold.fold({conf});
    ++diag.conflicts_found;
    ++diag.deferred_swept;
  }
  if (diag.deferred_swept > 0) add_warning(warnings, warning::kDeferredSwept);

  if (fold.hglobal.empty()) {
    GlobalFold::throw_unrepairable(fold.folded);
  }
  HittingSet chosen = prefer(fold.hglobal);

  RevisionResult result{
      .global_hitting_sets = std::move(fold.hglobal),
      .chosen = chosen,
      .revised_kb = kb.without(chosen.clause_ids),
      .regime_per_block = std::move(regime_per_block),
      .shifts_used = static_cast<unsigned>(family.members.size()),
      .h0 = {},
      .conjecture_verified = false,  // never re-checked globally, by design
      .warnings = std::move(warnings),
      .diag = diag,
      .base_blocking = std::move(base),
  };
  result.h0 = check_h0(observed_dc(fold.folded, kb, result.warnings), config.k_r);
  if (!result.h0.holds) add_warning(result.warnings, warning::kH0Violated);
  result.diag.t_total_ms = ms_since(start);
  return result;
}

}  // namespace spacerev
