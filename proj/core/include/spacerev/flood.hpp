#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spacerev/kb.hpp"
#include "spacerev/space_graph.hpp"

namespace spacerev {

/// Flooding instance: parcels carry optional water-level interval beliefs
/// (revisable) and directed flux observations between adjacent parcels
/// (protected). Levels are sampled heights 0..levels-1.
struct FloodScenario {
  std::shared_ptr<const SpaceGraph> graph;
  unsigned levels = 1;
  std::map<VertexId, std::pair<unsigned, unsigned>> intervals;  // parcel -> (lo, hi)
  std::vector<std::pair<VertexId, VertexId>> fluxes;            // (from, to)

  /// Throws InvalidScenarioError on bounds outside [0, levels), flux pairs
  /// that are not graph edges, or duplicates.
  void validate() const;

  /// Text format, one construct per line:
  ///   levels <L>
  ///   v <id> / e <id1> <id2>      (graph lines)
  ///   interval <parcel> <lo> <hi>
  ///   flux <from> <to>
  ///   # ...                        comment
  static FloodScenario parse(std::istream& in);
  static FloodScenario parse_file(const std::string& path);
  void write(std::ostream& out) const;
};

/// Clause encoding. Atom A<l>@x means "water level at parcel x is >= l", for
/// l in 1..levels-1:
///   - ladder axioms A<l+1> -> A<l> per parcel (S2),
///   - interval (lo, hi) at x: unit A<lo>@x when lo >= 1 and unit
///     -A<hi+1>@x when hi+1 <= levels-1 (S1),
///   - flux x -> y: A<l>@y -> A<l>@x for every l (S2); upstream level
///     dominates downstream.
/// Clause ids are assigned in that order, deterministically.
KnowledgeBase compile(const FloodScenario& s);

enum class Topology { Path, Grid };

struct GeneratorParams {
  std::size_t parcel_count = 1;
  Topology topology = Topology::Path;
  unsigned levels = 4;
  double interval_density = 0.0;
  double flux_density = 0.0;
  /// When non-zero, plants a flux chain whose unique minimal conflict has
  /// spatial size exactly this value. 0 plants nothing.
  unsigned planted_conflict_size = 0;
};

/// Seeded random instance source. Deterministic for a fixed seed. Grid
/// topologies use the smallest full rectangle with at least parcel_count
/// cells. Throws InvalidParamsError when the parameters cannot be realized.
FloodScenario generate(const GeneratorParams& params, std::uint64_t rng_seed);

}  // namespace spacerev
