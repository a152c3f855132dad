#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spacerev/errors.hpp"

namespace spacerev {

using VertexId = std::uint32_t;

/// The parcel space: an unweighted, undirected simple graph. Vertices are
/// parcels, edges are adjacency. Immutable after construction and safe to
/// share across threads.
class SpaceGraph {
 public:
  static constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

  /// Throws ParseError on self-loops, duplicate edges or undeclared endpoints.
  SpaceGraph(std::vector<VertexId> vertices,
             const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// Text format, one construct per line:
  ///   v <id>         declares a vertex
  ///   e <id1> <id2>  declares an edge
  ///   # ...          comment
  static SpaceGraph parse(std::istream& in);
  static SpaceGraph parse_file(const std::string& path);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<VertexId>& vertices() const { return ids_; }

  bool has_vertex(VertexId v) const;
  std::size_t index_of(VertexId v) const;  // throws UnknownVertexError
  VertexId id_at(std::size_t index) const { return ids_[index]; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  /// Shortest-path edge counts from src to every vertex, indexed like
  /// vertices(). Unreachable entries hold kUnreachable.
  std::vector<unsigned> bfs_distances(VertexId src) const;

  /// Length of the minimal path between u and v; nullopt when unreachable.
  std::optional<unsigned> distance(VertexId u, VertexId v) const;

  /// All vertices within distance k of v (always contains v). Sorted.
  std::vector<VertexId> k_neighborhood(VertexId v, unsigned k) const;

 private:
  std::vector<VertexId> ids_;               // sorted, unique
  std::vector<std::vector<VertexId>> adj_;  // by index; sorted neighbor ids
  std::size_t edge_count_ = 0;
};

struct SeedPolicy {
  enum class Kind { Deterministic, Random };
  Kind kind = Kind::Deterministic;
  std::uint64_t rng_seed = 0;

  static SeedPolicy deterministic() { return {}; }
  static SeedPolicy random(std::uint64_t seed) {
    return {Kind::Random, seed};
  }
};

/// A partition of the graph into blocks grown as k-neighborhoods of seed
/// vertices, plus one cover per block: the annulus between the seed's kprime-
/// and k-neighborhoods on the full graph (thickness kprime - k).
struct Blocking {
  unsigned k = 0;
  unsigned kprime = 0;
  std::vector<VertexId> seeds;                // one per block
  std::vector<std::vector<VertexId>> blocks;  // sorted, disjoint, cover V
  std::vector<std::vector<VertexId>> covers;  // sorted; covers[i] ∩ blocks[i] = ∅

  std::size_t block_count() const { return blocks.size(); }

  /// Re-checks every structural invariant against g; throws Error on failure.
  void validate(const SpaceGraph& g) const;
};

/// Greedy decomposition: pick a seed, take its k-neighborhood restricted to
/// unassigned vertices as the next block, repeat until every vertex is
/// assigned. Covers are computed on the full graph from each seed.
/// Throws InvalidRadiiError when kprime <= k, InvalidParamsError on an empty
/// graph.
Blocking partition(const SpaceGraph& g, unsigned k, unsigned kprime,
                   SeedPolicy policy = {});

enum class ShiftScheme {
  PathChain,         // 1-D: seed chain advanced by offsets 1..2(kprime-k)
  GridAxes,          // 2-D grid: seeds offset along both axes
  ReseedHeuristic,   // anything else: re-seeded partitions (best effort)
};

struct ShiftFamily {
  ShiftScheme scheme = ShiftScheme::ReseedHeuristic;
  std::vector<Blocking> members;
};

/// Alternative blockings whose boundaries are displaced relative to base, so
/// that conflicts straddling a base block boundary fall inside one
/// block-plus-cover of some member. Family size: 2(kprime-k) on paths and for
/// the re-seed heuristic, 4(kprime-k)^2 on full rectangular grids.
ShiftFamily shift_blockings(const SpaceGraph& g, const Blocking& base);

}  // namespace spacerev
