#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace onefact {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> members);
  explicit VertexSet(std::vector<VertexId> members);

  // Rejects members >= num_vertices.
  void check_range(std::size_t num_vertices) const;

  bool contains(VertexId v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const VertexId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Members of `universe` (0..num_vertices-1) not in this set.
  VertexSet complement(std::size_t num_vertices) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

// Loopless multigraph on vertices 0..num_vertices-1. Parallel edges are
// distinct edge ids. Subgraphs produced by induced/cross/filter keep the
// ids of their host, so ids need not be dense.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t num_vertices);

  // Adds `count` parallel edges u-v and returns the first new id.
  EdgeId add_edges(VertexId u, VertexId v, std::size_t count = 1);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return ids_.size(); }
  // One past the largest edge id ever stored; sizes per-edge arrays.
  std::size_t edge_id_bound() const { return slot_.size(); }

  std::span<const EdgeId> edge_ids() const { return ids_; }
  bool contains_edge(EdgeId e) const;
  const Edge& endpoints(EdgeId e) const;

  std::span<const Incidence> incident(VertexId v) const;
  std::span<const EdgeId> edges_between(VertexId u, VertexId v) const;
  std::size_t pair_multiplicity(VertexId u, VertexId v) const;

  std::size_t degree(VertexId v) const;
  std::size_t degree_into(VertexId v, const VertexSet& s) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  // Max over pairs of pair_multiplicity; 0 when there are no edges.
  std::size_t multiplicity() const;
  std::optional<std::size_t> is_regular() const;

  Multigraph induced(const VertexSet& s) const;
  // Edges with one end in a and the other in b. a and b must partition V.
  Multigraph cross(const VertexSet& a, const VertexSet& b) const;
  Multigraph filter(const std::function<bool(EdgeId, const Edge&)>& keep) const;

  // Visits each unordered pair u<v with at least one edge.
  void for_each_pair(const std::function<void(VertexId, VertexId, std::span<const EdgeId>)>& fn) const;

 private:
  static std::uint64_t pair_key(VertexId u, VertexId v);
  void check_vertex(VertexId v) const;
  void insert_edge(EdgeId id, VertexId u, VertexId v);

  static constexpr std::uint32_t kNoSlot = UINT32_MAX;

  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Edge> edges_;               // by slot
  std::vector<EdgeId> ids_;               // by slot
  std::vector<std::uint32_t> slot_;       // by id
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> pairs_;
};

}  // namespace onefact
