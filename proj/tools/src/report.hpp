#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "spacerev/revision.hpp"

namespace spacerev::cli {

struct CommonOptions {
  std::string scenario_path;
  std::string graph_path;
  std::string clauses_path;
  unsigned k = 2;
  unsigned kprime = 4;
  unsigned kr = 12;
  std::uint64_t seed = 0;
  std::string seed_policy = "det";  // det | random
  unsigned budget_card = 6;
  std::uint64_t budget_candidates = 2'000'000;
  unsigned jobs = 1;
  std::string format = "text";  // text | tsv
  std::string report_path;
};

KnowledgeBase load_input(const CommonOptions& opts);
RevisionConfig make_config(const CommonOptions& opts);

struct RunReport {
  std::string mode;  // revise | compare
  std::size_t clause_count = 0;
  std::size_t parcel_count = 0;
  CommonOptions opts;
  RevisionResult result;

  // compare only
  std::optional<RevisionResult> global;
  std::string verdict;
  bool divergence_flagged = false;
};

/// Human-readable report, including wall-clock timings.
void write_text(std::ostream& out, const RunReport& report);

/// Machine-readable report: one header row and one data row, tab-separated.
/// Byte-identical across runs for fixed inputs and seed (no timings).
void write_tsv(std::ostream& out, const RunReport& report);

std::string regime_name(BlockRegime regime);
std::string scheme_name(ShiftScheme scheme);

}  // namespace spacerev::cli
