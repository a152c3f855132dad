#include "spacerev/consistency.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace spacerev {

namespace {

// Clauses encoded over interned atom indices: literal = (var << 1) | sign,
// sign 1 = positive.
struct EncodedSet {
  std::vector<std::vector<int>> clauses;
  std::size_t var_count = 0;
};

EncodedSet encode(const KnowledgeBase& kb, const std::vector<ClauseId>& ids) {
  EncodedSet enc;
  std::map<Atom, int> vars;
  enc.clauses.reserve(ids.size());
  for (ClauseId id : ids) {
    const Clause& c = kb.clause(id);
    std::vector<int> lits;
    lits.reserve(c.literals().size());
    for (const Literal& lit : c.literals()) {
      auto [it, inserted] = vars.emplace(lit.atom, static_cast<int>(vars.size()));
      lits.push_back((it->second << 1) | (lit.positive ? 1 : 0));
    }
    enc.clauses.push_back(std::move(lits));
  }
  enc.var_count = vars.size();
  return enc;
}

// Backtracking satisfiability check with unit propagation. Clause sets here
// are desk scale (a few dozen clauses), so plain scans per propagation round
// are fine.
class SatSolver {
 public:
  explicit SatSolver(const EncodedSet& enc) : enc_(enc) {}

  bool satisfiable(const std::vector<std::uint16_t>& clause_indices) {
    active_ = &clause_indices;
    assign_.assign(enc_.var_count, -1);
    trail_.clear();
    return solve();
  }

 private:
  enum class ClauseState { Satisfied, Unit, Unresolved, Falsified };

  ClauseState inspect(const std::vector<int>& lits, int& unit_lit) const {
    int unassigned = 0;
    unit_lit = -1;
    for (int lit : lits) {
      int var = lit >> 1;
      int want = lit & 1;
      if (assign_[var] == -1) {
        ++unassigned;
        unit_lit = lit;
        if (unassigned > 1) return ClauseState::Unresolved;
      } else if (assign_[var] == want) {
        return ClauseState::Satisfied;
      }
    }
    if (unassigned == 0) return ClauseState::Falsified;
    return ClauseState::Unit;
  }

  // Returns false on a falsified clause; pushes implied literals onto trail_.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint16_t ci : *active_) {
        int unit_lit;
        switch (inspect(enc_.clauses[ci], unit_lit)) {
          case ClauseState::Falsified:
            return false;
          case ClauseState::Unit:
            assign_[unit_lit >> 1] = static_cast<std::int8_t>(unit_lit & 1);
            trail_.push_back(unit_lit >> 1);
            changed = true;
            break;
          default:
            break;
        }
      }
    }
    return true;
  }

  bool solve() {
    std::size_t trail_mark = trail_.size();
    if (!propagate()) {
      unwind(trail_mark);
      return false;
    }
    int branch_var = -1;
    for (std::uint16_t ci : *active_) {
      for (int lit : enc_.clauses[ci]) {
        if (assign_[lit >> 1] == -1) {
          branch_var = lit >> 1;
          break;
        }
      }
      if (branch_var != -1) break;
    }
    if (branch_var == -1) {
      unwind(trail_mark);
      return true;  // every active clause satisfied
    }
    for (int value : {1, 0}) {
      assign_[branch_var] = static_cast<std::int8_t>(value);
      trail_.push_back(branch_var);
      if (solve()) {
        unwind(trail_mark);
        return true;
      }
      unwind(trail_mark);
    }
    return false;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  const EncodedSet& enc_;
  const std::vector<std::uint16_t>* active_ = nullptr;
  std::vector<std::int8_t> assign_;
  std::vector<int> trail_;
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool contains_any_sorted(const std::vector<std::uint16_t>& candidate,
                         const std::vector<std::vector<std::uint16_t>>& found) {
  for (const auto& f : found) {
    if (f.size() <= candidate.size() &&
        std::includes(candidate.begin(), candidate.end(), f.begin(), f.end())) {
      return true;
    }
  }
  return false;
}

// Enumeration engine for one minimal_conflicts() call.
struct MusSearch {
  const EncodedSet& enc;
  SatSolver solver;
  const EnumerationBudget& budget;
  MusStats stats;
  std::vector<std::vector<std::uint16_t>> found;
  std::unordered_map<std::vector<std::uint16_t>, bool, VecHash> memo;

  MusSearch(const EncodedSet& e, const EnumerationBudget& b)
      : enc(e), solver(e), budget(b) {}

  void charge_candidate() {
    if (++stats.candidates > budget.max_candidates) {
      throw BudgetExceededError(
          "minimal conflict enumeration exceeded the candidate budget (" +
          std::to_string(budget.max_candidates) + ")");
    }
  }

  bool sat(const std::vector<std::uint16_t>& subset) {
    ++stats.sat_calls;
    return solver.satisfiable(subset);
  }

  bool sat_memo(const std::vector<std::uint16_t>& subset) {
    auto it = memo.find(subset);
    if (it != memo.end()) return it->second;
    bool result = sat(subset);
    memo.emplace(subset, result);
    return result;
  }

  // Breadth-first over the subset lattice by cardinality: at level c every
  // minimal conflict of size < c is already known, so a c-subset that avoids
  // all of them has only consistent proper subsets; if it is inconsistent it
  // is a new minimal conflict.
  void run() {
    std::size_t n = enc.clauses.size();
    unsigned top = std::min<std::size_t>(budget.max_cardinality, n);
    std::vector<std::uint16_t> combo;
    for (unsigned c = 1; c <= top; ++c) {
      combo.assign(c, 0);
      for (unsigned i = 0; i < c; ++i) combo[i] = static_cast<std::uint16_t>(i);
      while (true) {
        charge_candidate();
        if (!contains_any_sorted(combo, found) && !sat(combo)) {
          found.push_back(combo);
        }
        // next combination
        int pos = static_cast<int>(c) - 1;
        while (pos >= 0 && combo[pos] == n - c + pos) --pos;
        if (pos < 0) break;
        ++combo[pos];
        for (unsigned i = pos + 1; i < c; ++i) combo[i] = combo[i - 1] + 1;
      }
    }
    if (top < n) {
      verify_complete(n);
    }
    std::sort(found.begin(), found.end());
  }

  // Larger minimal conflicts exist iff some inconsistent subset avoids every
  // found conflict. Branch on one contained conflict at a time: a witness
  // must drop at least one of its clauses.
  void verify_complete(std::size_t n) {
    std::vector<std::uint16_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint16_t>(i);
    charge_candidate();
    if (sat_memo(full)) return;  // consistent: nothing anywhere was missed
    std::unordered_set<std::vector<std::uint16_t>, VecHash> visited;
    if (unhit_inconsistent(full, visited)) {
      throw BudgetExceededError(
          "a minimal conflict larger than the cardinality bound (" +
          std::to_string(budget.max_cardinality) + ") exists");
    }
  }

  bool unhit_inconsistent(const std::vector<std::uint16_t>& subset,
                          std::unordered_set<std::vector<std::uint16_t>, VecHash>& visited) {
    if (!visited.insert(subset).second) return false;
    const std::vector<std::uint16_t>* inside = nullptr;
    for (const auto& f : found) {
      if (std::includes(subset.begin(), subset.end(), f.begin(), f.end())) {
        inside = &f;
        break;
      }
    }
    if (inside == nullptr) return true;  // inconsistent and avoids all found
    for (std::uint16_t drop : *inside) {
      std::vector<std::uint16_t> next;
      next.reserve(subset.size() - 1);
      for (std::uint16_t x : subset) {
        if (x != drop) next.push_back(x);
      }
      charge_candidate();
      if (!sat_memo(next) && unhit_inconsistent(next, visited)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_consistent(const KnowledgeBase& kb, const std::vector<ClauseId>& subset) {
  auto enc = encode(kb, subset);
  std::vector<std::uint16_t> all(enc.clauses.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint16_t>(i);
  SatSolver solver(enc);
  return solver.satisfiable(all);
}

bool is_consistent(const KnowledgeBase& kb) {
  return is_consistent(kb, kb.all_ids());
}

std::vector<Conflict> minimal_conflicts(const KnowledgeBase& kb,
                                        const std::vector<ClauseId>& subset,
                                        const EnumerationBudget& budget,
                                        MusStats* stats) {
  std::vector<ClauseId> ids = subset;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 60000) {
    throw InvalidParamsError("minimal_conflicts: clause set too large");
  }
  auto enc = encode(kb, ids);
  EnumerationBudget eff = budget;
  if (eff.max_cardinality == 0) eff.max_cardinality = 1;
  MusSearch search(enc, eff);
  search.run();
  if (stats != nullptr) {
    stats->candidates += search.stats.candidates;
    stats->sat_calls += search.stats.sat_calls;
  }
  std::vector<Conflict> out;
  out.reserve(search.found.size());
  for (const auto& f : search.found) {
    Conflict conf;
    conf.clause_ids.reserve(f.size());
    for (std::uint16_t local : f) conf.clause_ids.push_back(ids[local]);
    out.push_back(std::move(conf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Conflict> minimal_conflicts(const KnowledgeBase& kb,
                                        const EnumerationBudget& budget,
                                        MusStats* stats) {
  return minimal_conflicts(kb, kb.all_ids(), budget, stats);
}

unsigned conflict_size(const Conflict& conf, const KnowledgeBase& kb) {
  const SpaceGraph& g = kb.graph();
  std::vector<VertexId> footprint;
  for (ClauseId id : conf.clause_ids) {
    const auto& fp = kb.clause(id).footprint();
    footprint.insert(footprint.end(), fp.begin(), fp.end());
  }
  std::sort(footprint.begin(), footprint.end());
  footprint.erase(std::unique(footprint.begin(), footprint.end()), footprint.end());
  if (footprint.empty()) return 0;

  std::vector<std::vector<unsigned>> dists;
  dists.reserve(footprint.size());
  for (VertexId u : footprint) {
    dists.push_back(g.bfs_distances(u));
  }
  unsigned best = SpaceGraph::kUnreachable;
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    unsigned ecc = 0;
    bool reachable = true;
    for (const auto& d : dists) {
      if (d[vi] == SpaceGraph::kUnreachable) {
        reachable = false;
        break;
      }
      ecc = std::max(ecc, d[vi]);
    }
    if (reachable) best = std::min(best, ecc);
  }
  if (best == SpaceGraph::kUnreachable) {
    throw DisconnectedFootprintError(
        "conflict footprint spans disconnected components; its spatial size is unbounded");
  }
  return best;
}

unsigned max_conflict_size(const std::vector<Conflict>& confs, const KnowledgeBase& kb) {
  unsigned best = 0;
  for (const Conflict& conf : confs) {
    best = std::max(best, conflict_size(conf, kb));
  }
  return best;
}

}  // namespace spacerev
