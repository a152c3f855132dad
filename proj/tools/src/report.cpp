#include "report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "spacerev/flood.hpp"

namespace spacerev::cli {

KnowledgeBase load_input(const CommonOptions& opts) {
  if (!opts.scenario_path.empty()) {
    return compile(FloodScenario::parse_file(opts.scenario_path));
  }
  if (opts.graph_path.empty() || opts.clauses_path.empty()) {
    throw ParseError("provide either --scenario or both --graph and --clauses");
  }
  auto graph = std::make_shared<SpaceGraph>(SpaceGraph::parse_file(opts.graph_path));
  return KnowledgeBase::parse_file(opts.clauses_path, graph);
}

RevisionConfig make_config(const CommonOptions& opts) {
  RevisionConfig config;
  config.k = opts.k;
  config.kprime = opts.kprime;
  config.k_r = opts.kr;
  config.seed_policy = opts.seed_policy == "random" ? SeedPolicy::random(opts.seed)
                                                    : SeedPolicy::deterministic();
  config.budget.max_cardinality = opts.budget_card;
  config.budget.max_candidates = opts.budget_candidates;
  config.jobs = opts.jobs;
  return config;
}

std::string regime_name(BlockRegime regime) {
  switch (regime) {
    case BlockRegime::SpaceIndependent: return "space-independent";
    case BlockRegime::InfoIndependent: return "info-independent";
    case BlockRegime::Dependent: return "dependent";
  }
  return "?";
}

std::string scheme_name(ShiftScheme scheme) {
  switch (scheme) {
    case ShiftScheme::PathChain: return "path-chain";
    case ShiftScheme::GridAxes: return "grid-axes";
    case ShiftScheme::ReseedHeuristic: return "reseed-heuristic";
  }
  return "?";
}

namespace {

std::string join_ids(const std::vector<ClauseId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ",";
    out << ids[i];
  }
  return out.str();
}

std::string join_strings(const std::vector<std::string>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ",";
    out << items[i];
  }
  return out.str();
}

void regime_histogram(const RevisionResult& r, std::size_t& space_ind,
                      std::size_t& info_ind, std::size_t& dependent) {
  space_ind = info_ind = dependent = 0;
  for (BlockRegime regime : r.regime_per_block) {
    switch (regime) {
      case BlockRegime::SpaceIndependent: ++space_ind; break;
      case BlockRegime::InfoIndependent: ++info_ind; break;
      case BlockRegime::Dependent: ++dependent; break;
    }
  }
}

}  // namespace

void write_text(std::ostream& out, const RunReport& report) {
  const RevisionResult& r = report.result;
  out << "instance: " << report.clause_count << " clauses over "
      << report.parcel_count << " parcels\n";
  out << "blocking: k=" << report.opts.k << " kprime=" << report.opts.kprime
      << " blocks=" << r.base_blocking.block_count()
      << " shifts=" << r.shifts_used << " (" << scheme_name(r.diag.shift_scheme) << ")\n";
  std::size_t space_ind, info_ind, dependent;
  regime_histogram(r, space_ind, info_ind, dependent);
  out << "regimes: space-independent=" << space_ind << " info-independent=" << info_ind
      << " dependent=" << dependent << "\n";
  out << "conflicts: " << r.diag.conflicts_found
      << " (reencounters skipped=" << r.diag.conflict_reencounters
      << ", deferred swept=" << r.diag.deferred_swept << ")\n";
  out << "h0: d_c=" << r.h0.d_c << " k_r=" << r.h0.k_r << " -> "
      << (r.h0.holds ? "holds" : "violated") << "\n";
  out << "hitting sets: " << r.global_hitting_sets.size()
      << "; chosen: {" << join_ids(r.chosen.clause_ids) << "}\n";
  out << "consistency: "
      << (r.conjecture_verified ? "verified" : "not verified (operating assumption)")
      << "\n";
  if (!r.warnings.empty()) {
    out << "warnings: " << join_strings(r.warnings) << "\n";
  }
  out << "nodes: hs=" << r.diag.nodes_expanded << " mus-candidates="
      << r.diag.mus_candidates << " sat-calls=" << r.diag.sat_calls << "\n";
  out << "timing-ms: partition=" << r.diag.t_partition_ms
      << " detect=" << r.diag.t_detect_ms << " fold=" << r.diag.t_fold_ms
      << " total=" << r.diag.t_total_ms << "\n";
  if (report.mode == "compare") {
    const RevisionResult& g = *report.global;
    out << "global: hitting sets=" << g.global_hitting_sets.size()
        << "; chosen: {" << join_ids(g.chosen.clause_ids) << "}"
        << "; d_c=" << g.h0.d_c << "\n";
    out << "verdict: " << report.verdict << "\n";
  }
}

void write_tsv(std::ostream& out, const RunReport& report) {
  const RevisionResult& r = report.result;
  std::size_t space_ind, info_ind, dependent;
  regime_histogram(r, space_ind, info_ind, dependent);

  std::vector<std::pair<std::string, std::string>> cols;
  auto add = [&](const std::string& key, auto value) {
    std::ostringstream v;
    v << value;
    cols.emplace_back(key, v.str());
  };
  add("mode", report.mode);
  add("d", report.clause_count);
  add("m", report.parcel_count);
  add("k", report.opts.k);
  add("kprime", report.opts.kprime);
  add("kr", report.opts.kr);
  add("seed_policy", report.opts.seed_policy);
  add("seed", report.opts.seed);
  add("budget_card", report.opts.budget_card);
  add("blocks", r.base_blocking.block_count());
  add("shifts_used", r.shifts_used);
  add("shift_scheme", scheme_name(r.diag.shift_scheme));
  add("regime_space_independent", space_ind);
  add("regime_info_independent", info_ind);
  add("regime_dependent", dependent);
  add("conflicts_found", r.diag.conflicts_found);
  add("nodes_expanded", r.diag.nodes_expanded);
  add("mus_candidates", r.diag.mus_candidates);
  add("h0_dc", r.h0.d_c);
  add("h0_kr", r.h0.k_r);
  add("h0_holds", r.h0.holds ? 1 : 0);
  add("conjecture_verified", r.conjecture_verified ? 1 : 0);
  add("hitting_sets", r.global_hitting_sets.size());
  add("chosen", join_ids(r.chosen.clause_ids));
  add("warnings", join_strings(r.warnings));
  if (report.mode == "compare") {
    add("verdict", report.verdict);
    add("global_chosen", join_ids(report.global->chosen.clause_ids));
    add("global_dc", report.global->h0.d_c);
    add("divergence_flagged", report.divergence_flagged ? 1 : 0);
  }

  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << cols[i].first << (i + 1 < cols.size() ? '\t' : '\n');
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << cols[i].second << (i + 1 < cols.size() ? '\t' : '\n');
  }
}

}  // namespace spacerev::cli
