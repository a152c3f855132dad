#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "spacerev/space_graph.hpp"

namespace spacerev {

namespace {

bool sorted_contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<VertexId> sorted_difference(const std::vector<VertexId>& a,
                                        const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Greedy block construction: repeatedly seed at the first unassigned vertex
// of `order`, take the seed's k-neighborhood restricted to unassigned
// vertices as the block, and pair it with the full-graph annulus cover.
Blocking greedy_with_order(const SpaceGraph& g, unsigned k, unsigned kprime,
                           std::vector<std::size_t> order) {
  std::vector<char> assigned(g.vertex_count(), 0);
  std::size_t cursor = 0;
  Blocking out;
  out.k = k;
  out.kprime = kprime;
  std::size_t remaining = g.vertex_count();
  while (remaining > 0) {
    while (cursor < order.size() && assigned[order[cursor]]) {
      ++cursor;
    }
    std::size_t seed_index = order[cursor];
    VertexId seed = g.id_at(seed_index);
    auto full_k = g.k_neighborhood(seed, k);
    std::vector<VertexId> block;
    for (VertexId v : full_k) {
      std::size_t vi = g.index_of(v);
      if (!assigned[vi]) {
        assigned[vi] = 1;
        block.push_back(v);
        --remaining;
      }
    }
    out.seeds.push_back(seed);
    out.blocks.push_back(std::move(block));
    out.covers.push_back(sorted_difference(g.k_neighborhood(seed, kprime), full_k));
  }
  return out;
}

// --- structural detection for the shift schemes ---------------------------

// Returns the vertex indices of a path graph in end-to-end order, or empty
// when g is not a path. A single vertex counts as a path.
std::vector<std::size_t> path_order(const SpaceGraph& g) {
  std::size_t n = g.vertex_count();
  if (n == 0) return {};
  if (n == 1) return {0};
  if (g.edge_count() != n - 1) return {};
  std::size_t endpoint = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = g.neighbors(g.id_at(i)).size();
    if (deg > 2) return {};
    if (deg == 1 && endpoint == n) endpoint = i;
  }
  if (endpoint == n) return {};  // all degree 2: a cycle
  std::vector<std::size_t> order;
  order.reserve(n);
  std::size_t prev = n, cur = endpoint;
  while (true) {
    order.push_back(cur);
    const auto& nbrs = g.neighbors(g.id_at(cur));
    std::size_t next = n;
    for (VertexId nb : nbrs) {
      std::size_t ni = g.index_of(nb);
      if (ni != prev) {
        next = ni;
        break;
      }
    }
    if (next == n) break;
    prev = cur;
    cur = next;
  }
  if (order.size() != n) return {};  // disconnected
  return order;
}

struct GridShape {
  std::size_t width = 0, height = 0;
  std::vector<std::size_t> x, y;  // coordinates by vertex index
};

std::vector<unsigned> multi_source_distances(const SpaceGraph& g,
                                             const std::vector<std::size_t>& sources) {
  std::vector<unsigned> dist(g.vertex_count(), SpaceGraph::kUnreachable);
  std::vector<std::size_t> queue;
  for (std::size_t s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t cur = queue[head];
    for (VertexId nb : g.neighbors(g.id_at(cur))) {
      std::size_t ni = g.index_of(nb);
      if (dist[ni] == SpaceGraph::kUnreachable) {
        dist[ni] = dist[cur] + 1;
        queue.push_back(ni);
      }
    }
  }
  return dist;
}

// Recovers grid coordinates when g is a full rectangular grid with both
// sides >= 2. Coordinate recovery: from a corner c with neighbors n1, n2,
// the vertices whose distance to n1 exceeds their distance to c form the
// x = 0 column (and symmetrically the y = 0 row); distances to those two
// lines are then the coordinates themselves.
std::optional<GridShape> grid_coords(const SpaceGraph& g) {
  std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;
  std::size_t corner = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = g.neighbors(g.id_at(i)).size();
    if (deg < 2 || deg > 4) return std::nullopt;
    if (deg == 2 && corner == n) corner = i;
  }
  if (corner == n) return std::nullopt;

  const auto& cn = g.neighbors(g.id_at(corner));
  auto dc = g.bfs_distances(g.id_at(corner));
  auto d1 = g.bfs_distances(cn[0]);
  auto d2 = g.bfs_distances(cn[1]);
  std::vector<std::size_t> col0, row0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dc[i] == SpaceGraph::kUnreachable) return std::nullopt;
    if (d1[i] == dc[i] + 1) col0.push_back(i);
    if (d2[i] == dc[i] + 1) row0.push_back(i);
  }
  GridShape shape;
  auto xs = multi_source_distances(g, col0);
  auto ys = multi_source_distances(g, row0);
  shape.x.assign(n, 0);
  shape.y.assign(n, 0);
  std::size_t max_x = 0, max_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] == SpaceGraph::kUnreachable || ys[i] == SpaceGraph::kUnreachable) {
      return std::nullopt;
    }
    shape.x[i] = xs[i];
    shape.y[i] = ys[i];
    max_x = std::max<std::size_t>(max_x, xs[i]);
    max_y = std::max<std::size_t>(max_y, ys[i]);
  }
  shape.width = max_x + 1;
  shape.height = max_y + 1;
  if (shape.width * shape.height != n) return std::nullopt;
  if (g.edge_count() != 2 * n - shape.width - shape.height) return std::nullopt;

  std::vector<char> occupied(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cell = shape.y[i] * shape.width + shape.x[i];
    if (occupied[cell]) return std::nullopt;
    occupied[cell] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId nb : g.neighbors(g.id_at(i))) {
      std::size_t ni = g.index_of(nb);
      std::size_t dx = shape.x[i] > shape.x[ni] ? shape.x[i] - shape.x[ni]
                                                : shape.x[ni] - shape.x[i];
      std::size_t dy = shape.y[i] > shape.y[ni] ? shape.y[i] - shape.y[ni]
                                                : shape.y[ni] - shape.y[i];
      if (dx + dy != 1) return std::nullopt;
    }
  }
  return shape;
}

}  // namespace

void Blocking::validate(const SpaceGraph& g) const {
  if (kprime <= k) throw Error("blocking: kprime must exceed k");
  if (blocks.size() != seeds.size() || blocks.size() != covers.size()) {
    throw Error("blocking: ragged block/seed/cover lists");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto nb_k = g.k_neighborhood(seeds[i], k);
    auto expected_cover = sorted_difference(g.k_neighborhood(seeds[i], kprime), nb_k);
    if (covers[i] != expected_cover) {
      throw Error("blocking: cover " + std::to_string(i) + " is not the seed annulus");
    }
    for (VertexId v : blocks[i]) {
      if (!sorted_contains(nb_k, v)) {
        throw Error("blocking: block " + std::to_string(i) + " exceeds its k-neighborhood");
      }
      if (sorted_contains(covers[i], v)) {
        throw Error("blocking: block and cover " + std::to_string(i) + " overlap");
      }
      std::size_t vi = g.index_of(v);
      if (seen[vi]) throw Error("blocking: blocks are not disjoint");
      seen[vi] = 1;
      ++total;
    }
  }
  if (total != g.vertex_count()) throw Error("blocking: blocks do not cover the graph");
}

Blocking partition(const SpaceGraph& g, unsigned k, unsigned kprime, SeedPolicy policy) {
  if (kprime <= k) {
    throw InvalidRadiiError("partition: kprime (" + std::to_string(kprime) +
                            ") must exceed k (" + std::to_string(k) + ")");
  }
  if (g.vertex_count() == 0) {
    throw InvalidParamsError("partition: empty graph");
  }
  if (policy.kind == SeedPolicy::Kind::Deterministic) {
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    return greedy_with_order(g, k, kprime, std::move(order));
  }
  // Random policy: pick a uniformly random unassigned vertex each round.
  std::mt19937_64 rng(policy.rng_seed);
  std::vector<char> assigned(g.vertex_count(), 0);
  Blocking out;
  out.k = k;
  out.kprime = kprime;
  std::size_t remaining = g.vertex_count();
  while (remaining > 0) {
    std::size_t pick = rng() % remaining;
    std::size_t seed_index = 0;
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      if (!assigned[i] && pick-- == 0) {
        seed_index = i;
        break;
      }
    }
    VertexId seed = g.id_at(seed_index);
    auto full_k = g.k_neighborhood(seed, k);
    std::vector<VertexId> block;
    for (VertexId v : full_k) {
      std::size_t vi = g.index_of(v);
      if (!assigned[vi]) {
        assigned[vi] = 1;
        block.push_back(v);
        --remaining;
      }
    }
    out.seeds.push_back(seed);
    out.blocks.push_back(std::move(block));
    out.covers.push_back(sorted_difference(g.k_neighborhood(seed, kprime), full_k));
  }
  return out;
}

ShiftFamily shift_blockings(const SpaceGraph& g, const Blocking& base) {
  unsigned q = base.kprime - base.k;
  std::size_t n = g.vertex_count();
  ShiftFamily family;

  if (auto order = path_order(g); !order.empty()) {
    // Advance the whole seed chain along the path by offsets 1..2q. Rotating
    // the greedy preference order places the first seed at path position j;
    // the chain then continues every k+1 positions and the leftover prefix is
    // carved last.
    family.scheme = ShiftScheme::PathChain;
    for (unsigned j = 1; j <= 2 * q; ++j) {
      std::vector<std::size_t> rotated;
      rotated.reserve(n);
      std::size_t off = j % n;
      for (std::size_t i = 0; i < n; ++i) {
        rotated.push_back(order[(i + off) % n]);
      }
      family.members.push_back(greedy_with_order(g, base.k, base.kprime, std::move(rotated)));
    }
    return family;
  }

  if (auto shape = grid_coords(g)) {
    // Offset the seed pattern by (dx, dy) for dx, dy in 1..2q: the greedy
    // preference order becomes row-major order of the translated coordinates,
    // so the first seed lands at (dx, dy) and the carving pattern moves with
    // it. 4q^2 members.
    family.scheme = ShiftScheme::GridAxes;
    std::size_t w = shape->width, h = shape->height;
    for (unsigned dx = 1; dx <= 2 * q; ++dx) {
      for (unsigned dy = 1; dy <= 2 * q; ++dy) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> key(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t tx = (shape->x[i] + w - dx % w) % w;
          std::size_t ty = (shape->y[i] + h - dy % h) % h;
          key[i] = ty * w + tx;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
        family.members.push_back(greedy_with_order(g, base.k, base.kprime, std::move(order)));
      }
    }
    return family;
  }

  // General graphs: 2q re-seeded partitions. Shift j prefers the lowest-id
  // unassigned vertex at distance >= j from the corresponding base seed, so
  // block boundaries land elsewhere. Heuristic: callers flag it in
  // diagnostics and the capture property is only asserted for paths/grids.
  family.scheme = ShiftScheme::ReseedHeuristic;
  std::vector<std::vector<unsigned>> base_seed_dist;
  base_seed_dist.reserve(base.seeds.size());
  for (VertexId s : base.seeds) {
    base_seed_dist.push_back(g.bfs_distances(s));
  }
  for (unsigned j = 1; j <= 2 * q; ++j) {
    std::vector<char> assigned(n, 0);
    auto pick = [&](std::size_t step) {
      const auto& dist = base_seed_dist[std::min(step, base_seed_dist.size() - 1)];
      std::size_t fallback = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        if (fallback == n) fallback = i;
        if (dist[i] != SpaceGraph::kUnreachable && dist[i] >= j) return i;
      }
      return fallback;
    };
    // Inline greedy loop sharing the assigned flags with the picker.
    Blocking member;
    member.k = base.k;
    member.kprime = base.kprime;
    std::size_t remaining = n;
    std::size_t step = 0;
    while (remaining > 0) {
      std::size_t seed_index = pick(step++);
      VertexId seed = g.id_at(seed_index);
      auto full_k = g.k_neighborhood(seed, base.k);
      std::vector<VertexId> block;
      for (VertexId v : full_k) {
        std::size_t vi = g.index_of(v);
        if (!assigned[vi]) {
          assigned[vi] = 1;
          block.push_back(v);
          --remaining;
        }
      }
      member.seeds.push_back(seed);
      member.blocks.push_back(std::move(block));
      member.covers.push_back(
          sorted_difference(g.k_neighborhood(seed, base.kprime), full_k));
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

}  // namespace spacerev
