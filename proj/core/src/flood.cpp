#include "spacerev/flood.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace spacerev {

namespace {

std::string level_atom(unsigned level) {
  return "A" + std::to_string(level);
}

// Stable uniform pick in [0, n); avoids distribution objects so the stream
// is identical across standard library versions.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

bool coin(std::mt19937_64& rng, double probability) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < probability;
}

}  // namespace

void FloodScenario::validate() const {
  if (!graph) {
    throw InvalidScenarioError("scenario: missing graph");
  }
  if (levels < 1) {
    throw InvalidScenarioError("scenario: levels must be positive");
  }
  for (const auto& [parcel, bounds] : intervals) {
    if (!graph->has_vertex(parcel)) {
      throw InvalidScenarioError("scenario: interval at unknown parcel " +
                                 std::to_string(parcel));
    }
    auto [lo, hi] = bounds;
    if (lo > hi || hi >= levels) {
      throw InvalidScenarioError("scenario: interval (" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + ") at parcel " +
                                 std::to_string(parcel) + " outside [0, " +
                                 std::to_string(levels) + ")");
    }
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [from, to] : fluxes) {
    if (!graph->has_vertex(from) || !graph->has_vertex(to) || !graph->adjacent(from, to)) {
      throw InvalidScenarioError("scenario: flux " + std::to_string(from) + " -> " +
                                 std::to_string(to) + " is not a graph edge");
    }
    if (!seen.insert({from, to}).second) {
      throw InvalidScenarioError("scenario: duplicate flux " + std::to_string(from) +
                                 " -> " + std::to_string(to));
    }
  }
}

FloodScenario FloodScenario::parse(std::istream& in) {
  FloodScenario s;
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  bool levels_seen = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto read_uint = [&](const char* what) {
      long long raw = -1;
      if (!(ls >> raw) || raw < 0) {
        throw ParseError("scenario line " + std::to_string(lineno) + ": expected " +
                         std::string(what));
      }
      return static_cast<unsigned>(raw);
    };
    if (tag == "levels") {
      if (levels_seen) {
        throw ParseError("scenario line " + std::to_string(lineno) + ": duplicate levels");
      }
      s.levels = read_uint("level count");
      levels_seen = true;
    } else if (tag == "v") {
      vertices.push_back(read_uint("vertex id"));
    } else if (tag == "e") {
      VertexId a = read_uint("vertex id");
      VertexId b = read_uint("vertex id");
      edges.emplace_back(a, b);
    } else if (tag == "interval") {
      VertexId parcel = read_uint("parcel id");
      unsigned lo = read_uint("interval low");
      unsigned hi = read_uint("interval high");
      if (s.intervals.count(parcel) != 0) {
        throw ParseError("scenario line " + std::to_string(lineno) +
                         ": duplicate interval for parcel " + std::to_string(parcel));
      }
      s.intervals[parcel] = {lo, hi};
    } else if (tag == "flux") {
      VertexId from = read_uint("parcel id");
      VertexId to = read_uint("parcel id");
      s.fluxes.emplace_back(from, to);
    } else {
      throw ParseError("scenario line " + std::to_string(lineno) + ": unknown construct '" +
                       tag + "'");
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError("scenario line " + std::to_string(lineno) + ": trailing tokens");
    }
  }
  if (!levels_seen) {
    throw ParseError("scenario: missing 'levels' line");
  }
  s.graph = std::make_shared<SpaceGraph>(std::move(vertices), edges);
  std::sort(s.fluxes.begin(), s.fluxes.end());
  s.validate();
  return s;
}

FloodScenario FloodScenario::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path);
  }
  return parse(in);
}

void FloodScenario::write(std::ostream& out) const {
  out << "levels " << levels << "\n";
  for (VertexId v : graph->vertices()) {
    out << "v " << v << "\n";
  }
  std::set<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : graph->vertices()) {
    for (VertexId nb : graph->neighbors(v)) {
      auto key = std::minmax(v, nb);
      edges.insert({key.first, key.second});
    }
  }
  for (auto [a, b] : edges) {
    out << "e " << a << " " << b << "\n";
  }
  for (const auto& [parcel, bounds] : intervals) {
    out << "interval " << parcel << " " << bounds.first << " " << bounds.second << "\n";
  }
  for (auto [from, to] : fluxes) {
    out << "flux " << from << " " << to << "\n";
  }
}

KnowledgeBase compile(const FloodScenario& s) {
  s.validate();
  std::vector<Clause> clauses;
  ClauseId next_id = 0;
  auto lit = [](VertexId parcel, unsigned level, bool positive) {
    return Literal{Atom{parcel, level_atom(level)}, positive};
  };

  // Ladder axioms: level >= l+1 implies level >= l.
  for (VertexId parcel : s.graph->vertices()) {
    for (unsigned l = 1; l + 1 < s.levels; ++l) {
      clauses.emplace_back(next_id++, ClauseSource::S2,
                           std::vector<Literal>{lit(parcel, l + 1, false), lit(parcel, l, true)});
    }
  }
  // Interval bounds as unit beliefs.
  for (const auto& [parcel, bounds] : s.intervals) {
    auto [lo, hi] = bounds;
    if (lo >= 1) {
      clauses.emplace_back(next_id++, ClauseSource::S1,
                           std::vector<Literal>{lit(parcel, lo, true)});
    }
    if (hi + 1 <= s.levels - 1) {
      clauses.emplace_back(next_id++, ClauseSource::S1,
                           std::vector<Literal>{lit(parcel, hi + 1, false)});
    }
  }
  // Flux x -> y: downstream level l forces upstream level l.
  std::vector<std::pair<VertexId, VertexId>> fluxes = s.fluxes;
  std::sort(fluxes.begin(), fluxes.end());
  for (auto [from, to] : fluxes) {
    for (unsigned l = 1; l < s.levels; ++l) {
      clauses.emplace_back(next_id++, ClauseSource::S2,
                           std::vector<Literal>{lit(to, l, false), lit(from, l, true)});
    }
  }
  return KnowledgeBase(s.graph, std::move(clauses));
}

FloodScenario generate(const GeneratorParams& params, std::uint64_t rng_seed) {
  if (params.parcel_count == 0) {
    throw InvalidParamsError("generate: parcel_count must be positive");
  }
  if (params.levels < 1) {
    throw InvalidParamsError("generate: levels must be positive");
  }
  for (double density : {params.interval_density, params.flux_density}) {
    if (density < 0.0 || density > 1.0 || !std::isfinite(density)) {
      throw InvalidParamsError("generate: densities must lie in [0, 1]");
    }
  }

  FloodScenario s;
  s.levels = params.levels;
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t width = 0, height = 0;
  if (params.topology == Topology::Path) {
    for (std::size_t i = 0; i < params.parcel_count; ++i) {
      vertices.push_back(static_cast<VertexId>(i));
      if (i > 0) edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
    }
  } else {
    width = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(params.parcel_count))));
    height = (params.parcel_count + width - 1) / width;
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        VertexId v = static_cast<VertexId>(y * width + x);
        vertices.push_back(v);
        if (x > 0) edges.emplace_back(v - 1, v);
        if (y > 0) edges.emplace_back(static_cast<VertexId>(v - width), v);
      }
    }
  }
  s.graph = std::make_shared<SpaceGraph>(std::move(vertices), edges);

  std::mt19937_64 rng(rng_seed);
  std::set<VertexId> reserved;

  if (params.planted_conflict_size > 0) {
    if (params.levels < 2) {
      throw InvalidParamsError("generate: planting a conflict needs levels >= 2");
    }
    // A chain of 2s-1 flux edges whose footprint has graph radius exactly s,
    // with end intervals incompatible at the top level.
    std::size_t chain_edges = 2 * static_cast<std::size_t>(params.planted_conflict_size) - 1;
    std::vector<VertexId> chain;
    if (params.topology == Topology::Path) {
      std::size_t n = s.graph->vertex_count();
      if (n < chain_edges + 1) {
        throw InvalidParamsError("generate: planted conflict does not fit the path");
      }
      std::size_t start = rand_below(rng, n - chain_edges);
      for (std::size_t i = 0; i <= chain_edges; ++i) {
        chain.push_back(static_cast<VertexId>(start + i));
      }
    } else {
      std::size_t max_span = (width - 1) + (height - 1);
      if (max_span < chain_edges) {
        throw InvalidParamsError("generate: planted conflict does not fit the grid");
      }
      // Monotone staircase: walk right as far as possible, then down. A
      // monotone lattice chain of n edges has graph radius exactly ceil(n/2).
      std::size_t x_limit = std::min(width - 1, max_span - chain_edges);
      std::size_t x = rand_below(rng, x_limit + 1);
      std::size_t right_steps = std::min(chain_edges, width - 1 - x);
      std::size_t down_steps = chain_edges - right_steps;
      std::size_t y = rand_below(rng, height - down_steps);
      chain.push_back(static_cast<VertexId>(y * width + x));
      for (std::size_t step = 0; step < chain_edges; ++step) {
        if (step < right_steps) {
          ++x;
        } else {
          ++y;
        }
        chain.push_back(static_cast<VertexId>(y * width + x));
      }
    }
    unsigned boundary = params.levels - 1;  // conflict rides the top level
    s.intervals[chain.front()] = {0, boundary - 1};
    s.intervals[chain.back()] = {boundary, boundary};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      s.fluxes.emplace_back(chain[i], chain[i + 1]);
    }
    reserved.insert(chain.begin(), chain.end());
  }

  for (VertexId v : s.graph->vertices()) {
    if (reserved.count(v) != 0) continue;
    if (coin(rng, params.interval_density)) {
      unsigned lo = static_cast<unsigned>(rand_below(rng, s.levels));
      unsigned hi = lo + static_cast<unsigned>(rand_below(rng, s.levels - lo));
      s.intervals[v] = {lo, hi};
    }
  }
  std::set<std::pair<VertexId, VertexId>> all_edges;
  for (VertexId v : s.graph->vertices()) {
    for (VertexId nb : s.graph->neighbors(v)) {
      auto key = std::minmax(v, nb);
      all_edges.insert({key.first, key.second});
    }
  }
  for (auto [a, b] : all_edges) {
    if (reserved.count(a) != 0 || reserved.count(b) != 0) continue;
    if (coin(rng, params.flux_density)) {
      if (rand_below(rng, 2) == 0) {
        s.fluxes.emplace_back(a, b);
      } else {
        s.fluxes.emplace_back(b, a);
      }
    }
  }
  std::sort(s.fluxes.begin(), s.fluxes.end());
  s.validate();
  return s;
}

}  // namespace spacerev
