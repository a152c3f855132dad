#include "spacerev/space_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace spacerev {

namespace {

std::string vertex_msg(const char* what, VertexId v) {
  return std::string(what) + ": vertex " + std::to_string(v);
}

}  // namespace

SpaceGraph::SpaceGraph(std::vector<VertexId> vertices,
                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ParseError("duplicate vertex declaration");
  }
  ids_ = std::move(vertices);
  adj_.assign(ids_.size(), {});

  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : edges) {
    if (a == b) {
      throw ParseError(vertex_msg("self-loop edge", a));
    }
    if (!has_vertex(a) || !has_vertex(b)) {
      throw ParseError(vertex_msg("edge endpoint not declared", has_vertex(a) ? b : a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) {
      throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    adj_[index_of(a)].push_back(b);
    adj_[index_of(b)].push_back(a);
  }
  edge_count_ = seen.size();
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

SpaceGraph SpaceGraph::parse(std::istream& in) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) {
      continue;  // blank or comment-only line
    }
    auto read_id = [&](VertexId& out) {
      long long raw = -1;
      if (!(ls >> raw) || raw < 0) {
        throw ParseError("graph line " + std::to_string(lineno) + ": expected non-negative id");
      }
      out = static_cast<VertexId>(raw);
    };
    if (tag == "v") {
      VertexId v;
      read_id(v);
      vertices.push_back(v);
    } else if (tag == "e") {
      VertexId a, b;
      read_id(a);
      read_id(b);
      edges.emplace_back(a, b);
    } else {
      throw ParseError("graph line " + std::to_string(lineno) + ": unknown construct '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError("graph line " + std::to_string(lineno) + ": trailing tokens");
    }
  }
  return SpaceGraph(std::move(vertices), edges);
}

SpaceGraph SpaceGraph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open graph file: " + path);
  }
  return parse(in);
}

bool SpaceGraph::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t SpaceGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw UnknownVertexError(vertex_msg("unknown vertex", v));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

const std::vector<VertexId>& SpaceGraph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

bool SpaceGraph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = neighbors(u);
  (void)index_of(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<unsigned> SpaceGraph::bfs_distances(VertexId src) const {
  std::vector<unsigned> dist(ids_.size(), kUnreachable);
  std::deque<std::size_t> queue;
  dist[index_of(src)] = 0;
  queue.push_back(index_of(src));
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (VertexId nb : adj_[cur]) {
      std::size_t ni = index_of(nb);
      if (dist[ni] == kUnreachable) {
        dist[ni] = dist[cur] + 1;
        queue.push_back(ni);
      }
    }
  }
  return dist;
}

std::optional<unsigned> SpaceGraph::distance(VertexId u, VertexId v) const {
  std::size_t vi = index_of(v);
  auto dist = bfs_distances(u);
  if (dist[vi] == kUnreachable) {
    return std::nullopt;
  }
  return dist[vi];
}

std::vector<VertexId> SpaceGraph::k_neighborhood(VertexId v, unsigned k) const {
  auto dist = bfs_distances(v);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (dist[i] <= k) {
      out.push_back(ids_[i]);
    }
  }
  return out;  // ids_ is sorted, so out is sorted
}

}  // namespace spacerev
