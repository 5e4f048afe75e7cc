#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "onefact/multigraph.hpp"

namespace onefact {

using Color = std::uint32_t;

// Thrown when an assignment would give two edges at one vertex the same
// color. `conflict` is the edge already holding that color.
class ColoringConflict : public std::runtime_error {
 public:
  ColoringConflict(EdgeId edge, EdgeId conflict, Color color);
  EdgeId edge;
  EdgeId conflict;
  Color color;
};

class PartialColoring;

// Path alternating between uncolored edges (positions 0, 2, 4) and edges
// of `color` (positions 1, 3). Five edges in the general case; a single
// uncolored edge is the degenerate form.
class AlternatingPath {
 public:
  // Validates against the current state of `c`; throws std::invalid_argument.
  AlternatingPath(const PartialColoring& c, std::vector<VertexId> vertices,
                  std::vector<EdgeId> edges, Color color);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  Color color() const { return color_; }

  // Same checks the constructor runs; exchange() calls this before mutating.
  void validate(const PartialColoring& c) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  Color color_;
};

// Proper partial edge coloring over a host multigraph. The host must outlive
// the coloring. Colors are 0..palette_size()-1.
class PartialColoring {
 public:
  PartialColoring(const Multigraph& host, std::size_t palette_size);

  const Multigraph& host() const { return *host_; }
  std::size_t palette_size() const { return palette_; }
  void extend_palette(std::size_t palette_size);

  void assign(EdgeId e, Color c);
  void unassign(EdgeId e);
  std::optional<Color> color_of(EdgeId e) const;
  bool is_colored(EdgeId e) const { return color_of(e).has_value(); }

  // Edge of color c at v, if any.
  std::optional<EdgeId> edge_at(VertexId v, Color c) const;
  bool misses(VertexId v, Color c) const { return !edge_at(v, c).has_value(); }
  std::vector<Color> missing_colors(VertexId v) const;
  std::size_t colored_degree(VertexId v) const;

  std::vector<EdgeId> class_edges(Color c) const;
  std::vector<std::size_t> class_sizes() const;
  std::size_t num_colored() const { return colored_; }
  bool is_total() const { return colored_ == host_->num_edges(); }

  void exchange(const AlternatingPath& p);

  // Recomputes properness and incidence/assignment consistency from scratch.
  // Throws std::logic_error describing the first inconsistency.
  void audit() const;

 private:
  static constexpr EdgeId kNone = UINT32_MAX;
  static constexpr Color kUncolored = UINT32_MAX;

  EdgeId& slot(VertexId v, Color c) { return incidence_[static_cast<std::size_t>(v) * palette_ + c]; }
  EdgeId slot(VertexId v, Color c) const { return incidence_[static_cast<std::size_t>(v) * palette_ + c]; }
  void check_edge(EdgeId e) const;

  const Multigraph* host_;
  std::size_t palette_;
  std::size_t colored_ = 0;
  std::vector<Color> assignment_;  // by edge id
  std::vector<EdgeId> incidence_;  // vertex-major, palette_ per vertex
};

}  // namespace onefact
