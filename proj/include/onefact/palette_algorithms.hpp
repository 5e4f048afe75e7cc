#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/multigraph.hpp"

namespace onefact {

// Total proper coloring on palette max_degree(g) + r. Each edge is inserted
// with a multi-fan at one endpoint: shift the fan when a color is missing at
// both the center and a fan vertex, otherwise flip one two-color chain first.
// Throws std::invalid_argument when multiplicity(g) > r.
PartialColoring vizing_color(const Multigraph& g, std::size_t r);

// Total proper coloring of a bipartite multigraph with exactly max_degree(g)
// colors. Even degree bounds are halved by Euler partition; odd ones are
// colored edge by edge with alternating-path flips.
PartialColoring konig_color(const Multigraph& g, const VertexSet& x, const VertexSet& y);

// The edge-by-edge route alone, without Euler splitting.
PartialColoring konig_color_alternating(const Multigraph& g, const VertexSet& x, const VertexSet& y);

// Splits a bipartite multigraph into two edge-disjoint halves whose degrees
// at every vertex are ceil(d/2) and floor(d/2) in some order.
std::pair<Multigraph, Multigraph> euler_split(const Multigraph& g, const VertexSet& x, const VertexSet& y);

// Rebalances a total proper coloring onto palette k so that every class has
// floor(|E|/k) or ceil(|E|/k) edges, by flipping two-color chains between
// the lowest-index largest and lowest-index smallest class.
PartialColoring equalize(PartialColoring c, std::size_t k);

// Edges of the maximal (a, b) chain starting at `start`, which must miss one
// of the two colors. The first edge has whichever color is present.
std::vector<EdgeId> kempe_path(const PartialColoring& c, VertexId start, Color a, Color b);

// Swaps colors a and b on the given edges (all of which carry a or b).
void swap_colors(PartialColoring& c, const std::vector<EdgeId>& edges, Color a, Color b);

struct MatchingWitness {
  // Exactly one of these is meaningful: `covers_x` selects.
  bool covers_x = false;
  std::vector<EdgeId> matching;  // covers every vertex of X when covers_x
  VertexSet deficiency;          // S subset of X with |N(S)| < |S| otherwise
  VertexSet neighbors;           // N(S)
};

// Maximum matching of the simplified bipartite graph (Hopcroft-Karp), lifted
// to the lowest edge id of each chosen pair. Returns an X-covering matching
// or a Hall violation that has been checked against g.
MatchingWitness hall_matching(const Multigraph& g, const VertexSet& x, const VertexSet& y);

// Throws std::invalid_argument naming an edge that does not cross (x, y).
void require_bipartite(const Multigraph& g, const VertexSet& x, const VertexSet& y);

}  // namespace onefact
