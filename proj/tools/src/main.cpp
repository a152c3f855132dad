// spacerev: belief revision for parcel-anchored propositional bases.
//   revise   run the contained (block-local) revision engine
//   compare  run both engines and report whether they agree
//   bench    sweep instance sizes and emit a TSV comparison table

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "report.hpp"
#include "spacerev/flood.hpp"

namespace {

using namespace spacerev;
using namespace spacerev::cli;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitUnrepairable = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDivergent = 4;

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "flood scenario file");
  cmd->add_option("--graph", opts.graph_path, "graph file (with --clauses)");
  cmd->add_option("--clauses", opts.clauses_path, "clause file (with --graph)");
  cmd->add_option("--k", opts.k, "block radius")->capture_default_str();
  cmd->add_option("--kprime", opts.kprime, "cover radius (> k)")->capture_default_str();
  cmd->add_option("--kr", opts.kr, "largest tractable neighborhood for the H0 gate")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "seed for the random seed policy")
      ->capture_default_str();
  cmd->add_option("--seed-policy", opts.seed_policy, "det | random")
      ->check(CLI::IsMember({"det", "random"}))
      ->capture_default_str();
  cmd->add_option("--budget-card", opts.budget_card, "max conflict cardinality")
      ->capture_default_str();
  cmd->add_option("--budget-candidates", opts.budget_candidates,
                  "max enumeration candidates")
      ->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "worker threads for block detection")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "stdout format: text | tsv")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--report", opts.report_path, "write a TSV report to this path");
}

void emit(const RunReport& report) {
  if (report.opts.format == "tsv") {
    write_tsv(std::cout, report);
  } else {
    write_text(std::cout, report);
  }
  if (!report.opts.report_path.empty()) {
    std::ofstream out(report.opts.report_path);
    if (!out) {
      throw ParseError("cannot write report file: " + report.opts.report_path);
    }
    write_tsv(out, report);
  }
}

int run_revise(const CommonOptions& opts) {
  KnowledgeBase kb = load_input(opts);
  RunReport report;
  report.mode = "revise";
  report.opts = opts;
  report.clause_count = kb.size();
  report.parcel_count = kb.graph().vertex_count();
  report.result = contained_revision(kb, make_config(opts));
  emit(report);
  return kExitOk;
}

int run_compare(const CommonOptions& opts) {
  KnowledgeBase kb = load_input(opts);
  RevisionConfig config = make_config(opts);
  RunReport report;
  report.mode = "compare";
  report.opts = opts;
  report.clause_count = kb.size();
  report.parcel_count = kb.graph().vertex_count();
  report.result = contained_revision(kb, config);
  report.global = global_rdr(kb, config.budget, config.k_r);

  bool equal = report.result.global_hitting_sets == report.global->global_hitting_sets;
  unsigned reach = opts.kprime - opts.k;
  if (equal) {
    report.verdict = "EQUAL";
  } else if (report.global->h0.d_c > reach) {
    // Documented divergence: some minimal conflict outgrows the cover reach.
    report.verdict = "DIVERGENT (conjecture violated: conflict size " +
                     std::to_string(report.global->h0.d_c) + " > " +
                     std::to_string(reach) + ")";
    report.divergence_flagged = true;
  } else {
    report.verdict = "DIVERGENT (unexplained)";
  }
  emit(report);
  if (equal || report.divergence_flagged) return kExitOk;
  return kExitDivergent;
}

int run_bench(const BenchOptions& opts, const std::string& report_path,
              const std::string& format) {
  auto rows = bench_sweep(opts);
  if (format == "tsv") {
    write_bench_tsv(std::cout, rows);
  } else {
    write_bench_text(std::cout, rows);
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      throw ParseError("cannot write report file: " + report_path);
    }
    write_bench_tsv(out, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief revision over parcel graphs, block by block"};
  app.require_subcommand(1);

  CommonOptions revise_opts;
  CLI::App* revise = app.add_subcommand("revise", "run contained revision");
  add_common_options(revise, revise_opts);

  CommonOptions compare_opts;
  CLI::App* compare = app.add_subcommand(
      "compare", "run contained revision and the global baseline, then compare");
  add_common_options(compare, compare_opts);

  BenchOptions bench_opts;
  std::string bench_report;
  std::string bench_format = "text";
  CLI::App* bench = app.add_subcommand("bench", "sweep sizes and time both engines");
  bench->add_option("--blocks-from", bench_opts.blocks_from, "first block count")
      ->capture_default_str();
  bench->add_option("--blocks-to", bench_opts.blocks_to, "last block count")
      ->capture_default_str();
  bench->add_option("--k", bench_opts.k, "block radius")->capture_default_str();
  bench->add_option("--kprime", bench_opts.kprime, "cover radius")->capture_default_str();
  bench->add_option("--kr", bench_opts.kr, "H0 neighborhood bound")->capture_default_str();
  bench->add_option("--levels", bench_opts.levels, "water levels")->capture_default_str();
  bench->add_option("--interval-density", bench_opts.interval_density,
                    "interval belief density")
      ->capture_default_str();
  bench->add_option("--flux-density", bench_opts.flux_density, "flux density")
      ->capture_default_str();
  bench->add_option("--planted-size", bench_opts.planted_size,
                    "planted conflict spatial size")
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "generator seed")->capture_default_str();
  bench->add_option("--budget-card", bench_opts.budget_card, "max conflict cardinality")
      ->capture_default_str();
  bench->add_option("--budget-candidates", bench_opts.budget_candidates,
                    "max enumeration candidates")
      ->capture_default_str();
  bench->add_option("--repeats", bench_opts.repeats, "timing repeats, best-of")
      ->capture_default_str();
  bench->add_option("--jobs", bench_opts.jobs, "worker threads")->capture_default_str();
  bench->add_option("--format", bench_format, "stdout format: text | tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  bench->add_option("--report", bench_report, "write the TSV table to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (revise->parsed()) return run_revise(revise_opts);
    if (compare->parsed()) return run_compare(compare_opts);
    if (bench->parsed()) return run_bench(bench_opts, bench_report, bench_format);
  } catch (const UnrepairableConflictError& e) {
    std::cerr << "unrepairable: " << e.what() << "\n";
    return kExitUnrepairable;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
