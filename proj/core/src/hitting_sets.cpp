#include "spacerev/hitting_sets.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace spacerev {

namespace {

bool is_subset(const std::vector<ClauseId>& a, const std::vector<ClauseId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<ClauseId>& a, const std::vector<ClauseId>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return false;
    }
  }
  return true;
}

std::vector<ClauseId> sorted_union(const std::vector<ClauseId>& a,
                                   const std::vector<ClauseId>& b) {
  std::vector<ClauseId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<HittingSet> minimize_sets(std::vector<HittingSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<HittingSet> out;
  for (const HittingSet& candidate : sets) {
    bool dominated = false;
    for (const HittingSet& other : sets) {
      if (other.clause_ids.size() < candidate.clause_ids.size() &&
          is_subset(other.clause_ids, candidate.clause_ids)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

// Hitting-set tree over a precomputed conflict collection. Nodes carry the
// edge labels on their root path, H(n). A node is labeled with the first
// collection member disjoint from H(n) and branches on that member's
// elements; a node with no such member makes H(n) a hitting set. Only the
// reuse rule prunes during construction; a final subset-minimization pass
// guarantees minimality regardless of expansion order.
HSTreeResult hs_tree(const std::vector<Conflict>& conflicts,
                     const std::unordered_set<ClauseId>& excluded_labels) {
  HSTreeResult result;

  std::vector<std::vector<ClauseId>> collection;
  collection.reserve(conflicts.size());
  for (const Conflict& conf : conflicts) {
    if (conf.clause_ids.empty()) {
      throw InvalidParamsError("hs_tree: empty conflict");
    }
    collection.push_back(conf.clause_ids);
  }
  std::sort(collection.begin(), collection.end());
  collection.erase(std::unique(collection.begin(), collection.end()), collection.end());

  std::deque<std::vector<ClauseId>> queue;
  std::set<std::vector<ClauseId>> visited;
  std::set<std::size_t> used_labels;
  std::vector<HittingSet> completed;
  queue.push_back({});
  visited.insert({});

  while (!queue.empty()) {
    std::vector<ClauseId> path = std::move(queue.front());
    queue.pop_front();
    ++result.diag.nodes_expanded;

    std::size_t label = collection.size();
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (disjoint(collection[i], path)) {
        label = i;
        break;
      }
    }
    if (label == collection.size()) {
      completed.push_back(HittingSet{path});
      continue;
    }
    used_labels.insert(label);
    for (ClauseId branch : collection[label]) {
      if (excluded_labels.count(branch) != 0) continue;
      std::vector<ClauseId> child = path;
      child.insert(std::upper_bound(child.begin(), child.end(), branch), branch);
      if (!visited.insert(child).second) {
        ++result.diag.pruned;
        continue;
      }
      bool closed = false;
      for (const HittingSet& done : completed) {
        if (is_subset(done.clause_ids, child)) {
          closed = true;
          break;
        }
      }
      if (closed) {
        ++result.diag.pruned;
        continue;
      }
      queue.push_back(std::move(child));
    }
  }

  result.diag.conflicts_used = used_labels.size();
  result.sets = minimize_sets(std::move(completed));
  return result;
}

std::vector<HittingSet> filter_protected(const std::vector<HittingSet>& hs,
                                         const KnowledgeBase& kb) {
  std::vector<HittingSet> out;
  for (const HittingSet& h : hs) {
    bool all_s1 = true;
    for (ClauseId id : h.clause_ids) {
      if (kb.source_of(id) != ClauseSource::S1) {
        all_s1 = false;
        break;
      }
    }
    if (all_s1) out.push_back(h);
  }
  return out;
}

std::vector<HittingSet> combine_independent(const std::vector<HittingSet>& ha,
                                            const std::vector<HittingSet>& hb) {
  std::vector<ClauseId> ids_a, ids_b;
  for (const HittingSet& h : ha) {
    ids_a.insert(ids_a.end(), h.clause_ids.begin(), h.clause_ids.end());
  }
  for (const HittingSet& h : hb) {
    ids_b.insert(ids_b.end(), h.clause_ids.begin(), h.clause_ids.end());
  }
  std::sort(ids_a.begin(), ids_a.end());
  std::sort(ids_b.begin(), ids_b.end());
  if (!disjoint(ids_a, ids_b)) {
    throw IndependenceViolatedError(
        "combine_independent: the two sides share clause ids");
  }
  std::vector<HittingSet> out;
  out.reserve(ha.size() * hb.size());
  for (const HittingSet& a : ha) {
    for (const HittingSet& b : hb) {
      out.push_back(HittingSet{sorted_union(a.clause_ids, b.clause_ids)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HittingSet> combine_min_union(const std::vector<std::vector<HittingSet>>& parts) {
  std::vector<HittingSet> acc{HittingSet{}};
  for (const auto& part : parts) {
    std::vector<HittingSet> next;
    next.reserve(acc.size() * part.size());
    for (const HittingSet& a : acc) {
      for (const HittingSet& b : part) {
        next.push_back(HittingSet{sorted_union(a.clause_ids, b.clause_ids)});
      }
    }
    acc = std::move(next);
  }
  return minimize_sets(std::move(acc));
}

HittingSet prefer(const std::vector<HittingSet>& hs, PreferenceOrder order) {
  if (hs.empty()) {
    throw EmptyCandidatesError("prefer: no hitting sets to choose from");
  }
  (void)order;  // only MinCardinalityLex ships
  const HittingSet* best = &hs.front();
  for (const HittingSet& h : hs) {
    if (h.clause_ids.size() < best->clause_ids.size() ||
        (h.clause_ids.size() == best->clause_ids.size() &&
         h.clause_ids < best->clause_ids)) {
      best = &h;
    }
  }
  return *best;
}

}  // namespace spacerev
