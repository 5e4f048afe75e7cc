#pragma once

// Independent oracles used by the unit and acceptance tests. None of these
// reuse the library's coloring or matching code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/multigraph.hpp"

namespace onefact::testing {

inline Multigraph complete_graph(std::size_t n, std::size_t mult = 1) {
  Multigraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edges(u, v, mult);
  }
  return g;
}

inline Multigraph complete_bipartite(std::size_t n, std::size_t mult = 1) {
  Multigraph g(2 * n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) g.add_edges(u, static_cast<VertexId>(n + v), mult);
  }
  return g;
}

inline VertexSet range_set(std::size_t lo, std::size_t hi) {
  std::vector<VertexId> out;
  for (std::size_t v = lo; v < hi; ++v) out.push_back(static_cast<VertexId>(v));
  return VertexSet(std::move(out));
}

// (u, v, multiplicity) for every pair with an edge, ascending.
inline std::vector<std::tuple<VertexId, VertexId, std::size_t>> pair_counts(const Multigraph& g) {
  std::vector<std::tuple<VertexId, VertexId, std::size_t>> out;
  g.for_each_pair([&](VertexId u, VertexId v, std::span<const EdgeId> ids) { out.emplace_back(u, v, ids.size()); });
  return out;
}

// Properness recomputed from endpoint lists only.
inline bool proper_from_scratch(const PartialColoring& c) {
  const Multigraph& g = c.host();
  std::map<std::pair<VertexId, Color>, int> seen;
  for (EdgeId e : g.edge_ids()) {
    const auto col = c.color_of(e);
    if (!col) continue;
    if (*col >= c.palette_size()) return false;
    const Edge& ends = g.endpoints(e);
    if (++seen[{ends.u, *col}] > 1 || ++seen[{ends.v, *col}] > 1) return false;
  }
  return true;
}

inline std::size_t colors_used(const PartialColoring& c) {
  std::vector<char> used(c.palette_size(), 0);
  for (EdgeId e : c.host().edge_ids()) {
    if (auto col = c.color_of(e)) used[*col] = 1;
  }
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
}

// Exact chromatic index by backtracking; tiny graphs only.
inline std::size_t chromatic_index(const Multigraph& g) {
  std::vector<EdgeId> edges(g.edge_ids().begin(), g.edge_ids().end());
  for (std::size_t k = g.max_degree();; ++k) {
    std::vector<std::vector<char>> busy(g.num_vertices(), std::vector<char>(k, 0));
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == edges.size()) return true;
      const Edge& ends = g.endpoints(edges[i]);
      for (std::size_t c = 0; c < k; ++c) {
        if (busy[ends.u][c] || busy[ends.v][c]) continue;
        busy[ends.u][c] = busy[ends.v][c] = 1;
        if (place(i + 1)) return true;
        busy[ends.u][c] = busy[ends.v][c] = 0;
      }
      return false;
    };
    if (place(0)) return k;
  }
}

// Maximum matching size of a bipartite graph by DP over subsets of y;
// |y| <= 16.
inline std::size_t max_matching_size(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  std::vector<VertexId> ys(y.begin(), y.end());
  std::vector<VertexId> xs(x.begin(), x.end());
  std::vector<unsigned> adj(xs.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (g.pair_multiplicity(xs[i], ys[j])) adj[i] |= 1u << j;
    }
  }
  // best[mask] = max matching using exactly the y-vertices available in mask, over processed x.
  std::vector<int> best(1u << ys.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> next = best;
    for (unsigned mask = 0; mask < best.size(); ++mask) {
      for (unsigned m = adj[i] & mask; m; m &= m - 1) {
        const unsigned bit = m & (~m + 1);
        next[mask] = std::max(next[mask], best[mask ^ bit] + 1);
      }
    }
    best = std::move(next);
  }
  return static_cast<std::size_t>(best.back());
}

}  // namespace onefact::testing
