#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spacerev/flood.hpp"
#include "spacerev/revision.hpp"

namespace spacerev::cli {

struct BenchOptions {
  unsigned blocks_from = 2;
  unsigned blocks_to = 16;
  unsigned k = 2;
  unsigned kprime = 4;
  unsigned kr = 12;
  unsigned levels = 3;
  double interval_density = 0.25;
  double flux_density = 0.25;
  unsigned planted_size = 2;
  std::uint64_t seed = 1;
  unsigned budget_card = 6;
  std::uint64_t budget_candidates = 2'000'000;
  unsigned repeats = 1;
  unsigned jobs = 1;
};

struct BenchRow {
  unsigned blocks = 0;
  std::size_t d = 0;  // clause count
  std::size_t m = 0;  // parcel count
  unsigned k = 0;
  unsigned kprime = 0;
  double t_global_ms = 0.0;
  double t_contained_ms = 0.0;
  std::uint64_t nodes_global = 0;
  std::uint64_t nodes_contained = 0;
  std::string status_global = "ok";     // ok | budget
  std::string status_contained = "ok";
  double r_formula = 0.0;               // d^2 / m
  double measured_ratio = 0.0;          // t_global / t_contained
};

/// Sweeps path instances with a fixed block size: block count from
/// blocks_from to blocks_to, one planted conflict each, both engines timed.
std::vector<BenchRow> bench_sweep(const BenchOptions& opts);

void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_text(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace spacerev::cli
