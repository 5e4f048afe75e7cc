#include "onefact/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace onefact {

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("VertexSet: duplicate member");
  }
}

void VertexSet::check_range(std::size_t num_vertices) const {
  if (!members_.empty() && members_.back() >= num_vertices) {
    throw std::invalid_argument("VertexSet: member " + std::to_string(members_.back()) +
                                " out of range " + std::to_string(num_vertices));
  }
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(std::size_t num_vertices) const {
  std::vector<VertexId> rest;
  rest.reserve(num_vertices - std::min(num_vertices, members_.size()));
  auto it = members_.begin();
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      rest.push_back(v);
    }
  }
  return VertexSet(std::move(rest));
}

Multigraph::Multigraph(std::size_t num_vertices) : adjacency_(num_vertices) {}

std::uint64_t Multigraph::pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range " +
                            std::to_string(adjacency_.size()));
  }
}

void Multigraph::insert_edge(EdgeId id, VertexId u, VertexId v) {
  if (id >= slot_.size()) slot_.resize(id + 1, kNoSlot);
  slot_[id] = static_cast<std::uint32_t>(ids_.size());
  ids_.push_back(id);
  edges_.push_back({u, v});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  pairs_[pair_key(u, v)].push_back(id);
}

EdgeId Multigraph::add_edges(VertexId u, VertexId v, std::size_t count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u) + " rejected");
  }
  const auto first = static_cast<EdgeId>(slot_.size());
  for (std::size_t i = 0; i < count; ++i) {
    insert_edge(static_cast<EdgeId>(slot_.size()), u, v);
  }
  return first;
}

bool Multigraph::contains_edge(EdgeId e) const {
  return e < slot_.size() && slot_[e] != kNoSlot;
}

const Edge& Multigraph::endpoints(EdgeId e) const {
  if (!contains_edge(e)) throw std::out_of_range("edge " + std::to_string(e) + " not present");
  return edges_[slot_[e]];
}

std::span<const Incidence> Multigraph::incident(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::span<const EdgeId> Multigraph::edges_between(VertexId u, VertexId v) const {
  auto it = pairs_.find(pair_key(u, v));
  if (it == pairs_.end()) return {};
  return it->second;
}

std::size_t Multigraph::pair_multiplicity(VertexId u, VertexId v) const {
  return edges_between(u, v).size();
}

std::size_t Multigraph::degree(VertexId v) const { return incident(v).size(); }

std::size_t Multigraph::degree_into(VertexId v, const VertexSet& s) const {
  std::size_t d = 0;
  for (const auto& inc : incident(v)) d += s.contains(inc.neighbor) ? 1 : 0;
  return d;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::size_t Multigraph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& adj : adjacency_) best = std::min(best, adj.size());
  return best;
}

std::size_t Multigraph::multiplicity() const {
  std::size_t best = 0;
  for (const auto& [key, ids] : pairs_) best = std::max(best, ids.size());
  return best;
}

std::optional<std::size_t> Multigraph::is_regular() const {
  if (adjacency_.empty()) return 0;
  const std::size_t d = adjacency_.front().size();
  for (const auto& adj : adjacency_) {
    if (adj.size() != d) return std::nullopt;
  }
  return d;
}

Multigraph Multigraph::filter(const std::function<bool(EdgeId, const Edge&)>& keep) const {
  Multigraph sub(num_vertices());
  for (std::size_t s = 0; s < ids_.size(); ++s) {
    if (keep(ids_[s], edges_[s])) sub.insert_edge(ids_[s], edges_[s].u, edges_[s].v);
  }
  if (sub.slot_.size() < slot_.size()) sub.slot_.resize(slot_.size(), kNoSlot);
  return sub;
}

Multigraph Multigraph::induced(const VertexSet& s) const {
  s.check_range(num_vertices());
  std::vector<char> in(num_vertices(), 0);
  for (VertexId v : s) in[v] = 1;
  return filter([&](EdgeId, const Edge& e) { return in[e.u] && in[e.v]; });
}

Multigraph Multigraph::cross(const VertexSet& a, const VertexSet& b) const {
  a.check_range(num_vertices());
  b.check_range(num_vertices());
  std::vector<char> side(num_vertices(), 0);
  for (VertexId v : a) side[v] = 1;
  for (VertexId v : b) {
    if (side[v]) throw std::invalid_argument("cross: parts overlap at vertex " + std::to_string(v));
    side[v] = 2;
  }
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (!side[v]) throw std::invalid_argument("cross: vertex " + std::to_string(v) + " in neither part");
  }
  return filter([&](EdgeId, const Edge& e) { return side[e.u] != side[e.v]; });
}

void Multigraph::for_each_pair(
    const std::function<void(VertexId, VertexId, std::span<const EdgeId>)>& fn) const {
  std::vector<std::uint64_t> keys;
  keys.reserve(pairs_.size());
  for (const auto& [key, ids] : pairs_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (auto key : keys) {
    fn(static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffu), pairs_.at(key));
  }
}

}  // namespace onefact
