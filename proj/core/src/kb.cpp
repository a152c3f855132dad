#include "spacerev/kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spacerev {

Clause::Clause(ClauseId id, ClauseSource source, std::vector<Literal> literals)
    : id_(id), source_(source) {
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  if (literals.empty()) {
    throw IngestError("clause " + std::to_string(id) + ": empty clause");
  }
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (literals[i - 1].atom == literals[i].atom) {
      throw IngestError("clause " + std::to_string(id) + ": tautology on atom " +
                        literals[i].atom.name + "@" +
                        std::to_string(literals[i].atom.parcel));
    }
  }
  literals_ = std::move(literals);
  for (const Literal& lit : literals_) {
    footprint_.push_back(lit.atom.parcel);
  }
  std::sort(footprint_.begin(), footprint_.end());
  footprint_.erase(std::unique(footprint_.begin(), footprint_.end()), footprint_.end());
}

KnowledgeBase::KnowledgeBase()
    : graph_(std::make_shared<SpaceGraph>(std::vector<VertexId>{},
                                          std::vector<std::pair<VertexId, VertexId>>{})) {}

KnowledgeBase::KnowledgeBase(std::shared_ptr<const SpaceGraph> graph,
                             std::vector<Clause> clauses)
    : graph_(std::move(graph)), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause& c = clauses_[i];
    if (!index_.emplace(c.id(), i).second) {
      throw IngestError("duplicate clause id " + std::to_string(c.id()));
    }
    for (VertexId parcel : c.footprint()) {
      if (!graph_->has_vertex(parcel)) {
        throw IngestError("clause " + std::to_string(c.id()) +
                          ": unknown parcel " + std::to_string(parcel));
      }
    }
  }
}

namespace {

Literal parse_literal(const std::string& token, std::size_t lineno) {
  std::string body = token;
  bool positive = true;
  if (!body.empty() && body[0] == '-') {
    positive = false;
    body.erase(0, 1);
  }
  auto at = body.rfind('@');
  if (at == std::string::npos || at == 0 || at + 1 >= body.size()) {
    throw ParseError("clause line " + std::to_string(lineno) + ": bad literal '" + token + "'");
  }
  std::string name = body.substr(0, at);
  std::string parcel_str = body.substr(at + 1);
  if (parcel_str.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("clause line " + std::to_string(lineno) + ": bad parcel in '" + token + "'");
  }
  return Literal{Atom{static_cast<VertexId>(std::stoul(parcel_str)), std::move(name)}, positive};
}

}  // namespace

KnowledgeBase KnowledgeBase::parse(std::istream& in,
                                   std::shared_ptr<const SpaceGraph> graph) {
  std::vector<Clause> clauses;
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
    if (tag != "c") {
      throw ParseError("clause line " + std::to_string(lineno) + ": unknown construct '" + tag + "'");
    }
    long long raw_id = -1;
    std::string source_str;
    if (!(ls >> raw_id >> source_str) || raw_id < 0) {
      throw ParseError("clause line " + std::to_string(lineno) + ": expected 'c <id> <S1|S2> <lit>...'");
    }
    ClauseSource source;
    if (source_str == "S1") {
      source = ClauseSource::S1;
    } else if (source_str == "S2") {
      source = ClauseSource::S2;
    } else {
      throw ParseError("clause line " + std::to_string(lineno) + ": bad source '" + source_str + "'");
    }
    std::vector<Literal> literals;
    std::string token;
    while (ls >> token) {
      literals.push_back(parse_literal(token, lineno));
    }
    clauses.emplace_back(static_cast<ClauseId>(raw_id), source, std::move(literals));
  }
  return KnowledgeBase(std::move(graph), std::move(clauses));
}

KnowledgeBase KnowledgeBase::parse_file(const std::string& path,
                                        std::shared_ptr<const SpaceGraph> graph) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open clause file: " + path);
  }
  return parse(in, std::move(graph));
}

const Clause& KnowledgeBase::clause(ClauseId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw BadIndexError("unknown clause id " + std::to_string(id));
  }
  return clauses_[it->second];
}

std::vector<ClauseId> KnowledgeBase::all_ids() const {
  std::vector<ClauseId> ids;
  ids.reserve(clauses_.size());
  for (const Clause& c : clauses_) {
    ids.push_back(c.id());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

KnowledgeBase KnowledgeBase::without(const std::vector<ClauseId>& removed) const {
  std::vector<Clause> kept;
  kept.reserve(clauses_.size());
  for (const Clause& c : clauses_) {
    if (std::find(removed.begin(), removed.end(), c.id()) == removed.end()) {
      kept.push_back(c);
    }
  }
  return KnowledgeBase(graph_, std::move(kept));
}

namespace {

bool sorted_contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

ClauseClass classify(const Clause& c, const Blocking& blocking, std::size_t block_index) {
  if (block_index >= blocking.block_count()) {
    throw BadIndexError("classify: block index " + std::to_string(block_index) +
                        " out of range (" + std::to_string(blocking.block_count()) + " blocks)");
  }
  const auto& block = blocking.blocks[block_index];
  const auto& cover = blocking.covers[block_index];
  bool touches_block = false, touches_cover = false, outside = false;
  for (VertexId parcel : c.footprint()) {
    if (sorted_contains(block, parcel)) {
      touches_block = true;
    } else if (sorted_contains(cover, parcel)) {
      touches_cover = true;
    } else {
      outside = true;
    }
  }
  if (outside) return ClauseClass::NClause;
  if (touches_block && touches_cover) return ClauseClass::CClause;
  if (touches_block) return ClauseClass::BClause;
  return ClauseClass::QClause;
}

std::vector<ClauseId> clauses_of(const KnowledgeBase& kb, const Blocking& blocking,
                                 std::size_t block_index,
                                 const std::vector<ClauseClass>& classes) {
  if (block_index >= blocking.block_count()) {
    throw BadIndexError("clauses_of: block index " + std::to_string(block_index) +
                        " out of range (" + std::to_string(blocking.block_count()) + " blocks)");
  }
  std::vector<ClauseId> out;
  for (const Clause& c : kb.clauses()) {
    ClauseClass cls = classify(c, blocking, block_index);
    if (std::find(classes.begin(), classes.end(), cls) != classes.end()) {
      out.push_back(c.id());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spacerev
