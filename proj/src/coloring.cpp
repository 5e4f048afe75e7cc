#include "onefact/coloring.hpp"

#include <algorithm>
#include <string>

namespace onefact {

ColoringConflict::ColoringConflict(EdgeId edge, EdgeId conflict, Color color)
    : std::runtime_error("color " + std::to_string(color) + " on edge " + std::to_string(edge) +
                         " conflicts with edge " + std::to_string(conflict)),
      edge(edge),
      conflict(conflict),
      color(color) {}

PartialColoring::PartialColoring(const Multigraph& host, std::size_t palette_size)
    : host_(&host),
      palette_(palette_size),
      assignment_(host.edge_id_bound(), kUncolored),
      incidence_(host.num_vertices() * palette_size, kNone) {}

void PartialColoring::extend_palette(std::size_t palette_size) {
  if (palette_size < palette_) throw std::invalid_argument("extend_palette: cannot shrink palette");
  if (palette_size == palette_) return;
  std::vector<EdgeId> grown(host_->num_vertices() * palette_size, kNone);
  for (std::size_t v = 0; v < host_->num_vertices(); ++v) {
    std::copy_n(incidence_.begin() + static_cast<std::ptrdiff_t>(v * palette_), palette_,
                grown.begin() + static_cast<std::ptrdiff_t>(v * palette_size));
  }
  incidence_ = std::move(grown);
  palette_ = palette_size;
}

void PartialColoring::check_edge(EdgeId e) const {
  if (!host_->contains_edge(e)) throw std::out_of_range("edge " + std::to_string(e) + " not in host");
}

void PartialColoring::assign(EdgeId e, Color c) {
  check_edge(e);
  if (c >= palette_) {
    throw std::out_of_range("color " + std::to_string(c) + " outside palette " + std::to_string(palette_));
  }
  if (assignment_[e] != kUncolored) {
    throw std::invalid_argument("edge " + std::to_string(e) + " already colored");
  }
  const Edge& ends = host_->endpoints(e);
  if (slot(ends.u, c) != kNone) throw ColoringConflict(e, slot(ends.u, c), c);
  if (slot(ends.v, c) != kNone) throw ColoringConflict(e, slot(ends.v, c), c);
  assignment_[e] = c;
  slot(ends.u, c) = e;
  slot(ends.v, c) = e;
  ++colored_;
}

void PartialColoring::unassign(EdgeId e) {
  check_edge(e);
  const Color c = assignment_[e];
  if (c == kUncolored) throw std::invalid_argument("edge " + std::to_string(e) + " is not colored");
  const Edge& ends = host_->endpoints(e);
  slot(ends.u, c) = kNone;
  slot(ends.v, c) = kNone;
  assignment_[e] = kUncolored;
  --colored_;
}

std::optional<Color> PartialColoring::color_of(EdgeId e) const {
  check_edge(e);
  if (assignment_[e] == kUncolored) return std::nullopt;
  return assignment_[e];
}

std::optional<EdgeId> PartialColoring::edge_at(VertexId v, Color c) const {
  if (c >= palette_) return std::nullopt;
  const EdgeId e = slot(v, c);
  if (e == kNone) return std::nullopt;
  return e;
}

std::vector<Color> PartialColoring::missing_colors(VertexId v) const {
  if (v >= host_->num_vertices()) throw std::out_of_range("vertex out of range");
  std::vector<Color> out;
  for (Color c = 0; c < palette_; ++c) {
    if (slot(v, c) == kNone) out.push_back(c);
  }
  return out;
}

std::size_t PartialColoring::colored_degree(VertexId v) const {
  std::size_t d = 0;
  for (Color c = 0; c < palette_; ++c) d += slot(v, c) != kNone ? 1 : 0;
  return d;
}

std::vector<EdgeId> PartialColoring::class_edges(Color c) const {
  if (c >= palette_) throw std::out_of_range("color outside palette");
  std::vector<EdgeId> out;
  for (EdgeId e : host_->edge_ids()) {
    if (assignment_[e] == c) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> PartialColoring::class_sizes() const {
  std::vector<std::size_t> sizes(palette_, 0);
  for (EdgeId e : host_->edge_ids()) {
    if (assignment_[e] != kUncolored) ++sizes[assignment_[e]];
  }
  return sizes;
}

AlternatingPath::AlternatingPath(const PartialColoring& c, std::vector<VertexId> vertices,
                                 std::vector<EdgeId> edges, Color color)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), color_(color) {
  validate(c);
}

void AlternatingPath::validate(const PartialColoring& c) const {
  const auto fail = [](const std::string& why) { throw std::invalid_argument("alternating path: " + why); };
  if (edges_.size() != 1 && edges_.size() != 5) fail("must have 1 or 5 edges");
  if (vertices_.size() != edges_.size() + 1) fail("vertex count must be edge count + 1");
  if (color_ >= c.palette_size()) fail("color outside palette");
  std::vector<VertexId> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("vertices not distinct");
  const Multigraph& g = c.host();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!g.contains_edge(edges_[i])) fail("edge not in host");
    const Edge& e = g.endpoints(edges_[i]);
    const bool joins = (e.u == vertices_[i] && e.v == vertices_[i + 1]) ||
                       (e.v == vertices_[i] && e.u == vertices_[i + 1]);
    if (!joins) fail("edge " + std::to_string(edges_[i]) + " does not join consecutive vertices");
    const auto col = c.color_of(edges_[i]);
    if (i % 2 == 0 && col.has_value()) fail("odd-position edge must be uncolored");
    if (i % 2 == 1 && col != color_) fail("even-position edge must carry the path color");
  }
  if (!c.misses(vertices_.front(), color_) || !c.misses(vertices_.back(), color_)) {
    fail("endpoints must miss the path color");
  }
}

void PartialColoring::exchange(const AlternatingPath& p) {
  p.validate(*this);
  const auto& edges = p.edges();
  for (std::size_t i = 1; i < edges.size(); i += 2) unassign(edges[i]);
  for (std::size_t i = 0; i < edges.size(); i += 2) assign(edges[i], p.color());
}

void PartialColoring::audit() const {
  std::size_t count = 0;
  for (EdgeId e : host_->edge_ids()) {
    const Color c = assignment_[e];
    if (c == kUncolored) continue;
    ++count;
    if (c >= palette_) throw std::logic_error("edge " + std::to_string(e) + " color outside palette");
    const Edge& ends = host_->endpoints(e);
    if (slot(ends.u, c) != e || slot(ends.v, c) != e) {
      throw std::logic_error("edge " + std::to_string(e) + " missing from incidence index");
    }
  }
  if (count != colored_) throw std::logic_error("colored edge count out of sync");
  for (VertexId v = 0; v < host_->num_vertices(); ++v) {
    for (Color c = 0; c < palette_; ++c) {
      const EdgeId e = slot(v, c);
      if (e == kNone) continue;
      if (!host_->contains_edge(e) || assignment_[e] != c) {
        throw std::logic_error("stale incidence entry at vertex " + std::to_string(v));
      }
      const Edge& ends = host_->endpoints(e);
      if (ends.u != v && ends.v != v) throw std::logic_error("incidence entry not incident");
    }
  }
}

}  // namespace onefact
