#include "onefact/palette_algorithms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace onefact {

std::vector<EdgeId> kempe_path(const PartialColoring& c, VertexId start, Color a, Color b) {
  const bool miss_a = c.misses(start, a);
  const bool miss_b = c.misses(start, b);
  if (!miss_a && !miss_b) {
    throw std::invalid_argument("kempe_path: start vertex " + std::to_string(start) + " misses neither color");
  }
  std::vector<EdgeId> path;
  if (miss_a && miss_b) return path;
  const Multigraph& g = c.host();
  VertexId cur = start;
  Color want = miss_a ? b : a;
  while (auto e = c.edge_at(cur, want)) {
    path.push_back(*e);
    cur = g.endpoints(*e).other(cur);
    want = want == a ? b : a;
  }
  return path;
}

void swap_colors(PartialColoring& c, const std::vector<EdgeId>& edges, Color a, Color b) {
  std::vector<Color> old;
  old.reserve(edges.size());
  for (EdgeId e : edges) {
    const auto col = c.color_of(e);
    if (col != a && col != b) throw std::invalid_argument("swap_colors: edge does not carry either color");
    old.push_back(*col);
  }
  for (EdgeId e : edges) c.unassign(e);
  for (std::size_t i = 0; i < edges.size(); ++i) c.assign(edges[i], old[i] == a ? b : a);
}

namespace {

VertexId path_end(const PartialColoring& c, VertexId start, const std::vector<EdgeId>& path) {
  VertexId cur = start;
  for (EdgeId e : path) cur = c.host().endpoints(e).other(cur);
  return cur;
}

// Multi-fan at center x for the uncolored edge entry[0]. Vertices are
// distinct; vertex t > 0 was reached through entry[t], whose color is missing
// at verts[parent[t]].
struct Fan {
  std::vector<VertexId> verts;
  std::vector<EdgeId> entry;
  std::vector<std::size_t> parent;
};

// Moves colors one step down the tree path from verts[0] to verts[t]:
// entry[0] ends up colored and entry[t] uncolored.
void shift_fan(PartialColoring& c, const Fan& f, std::size_t t) {
  std::vector<std::size_t> chain;
  for (std::size_t i = t;; i = f.parent[i]) {
    chain.push_back(i);
    if (i == 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  std::vector<Color> cols(chain.size());
  for (std::size_t l = 1; l < chain.size(); ++l) cols[l] = *c.color_of(f.entry[chain[l]]);
  for (std::size_t l = 1; l < chain.size(); ++l) c.unassign(f.entry[chain[l]]);
  for (std::size_t l = 1; l < chain.size(); ++l) c.assign(f.entry[chain[l - 1]], cols[l]);
}

class VizingInserter {
 public:
  explicit VizingInserter(PartialColoring& c)
      : c_(c), fan_index_(c.host().num_vertices(), kAbsent), owner_(c.palette_size(), kAbsent) {}

  void insert(EdgeId e0) {
    const Edge& ends = c_.host().endpoints(e0);
    const VertexId x = ends.u;
    Fan f{{ends.v}, {e0}, {0}};
    fan_index_[ends.v] = 0;
    run(x, f);
    for (VertexId v : f.verts) fan_index_[v] = kAbsent;
    for (Color col : touched_) owner_[col] = kAbsent;
    touched_.clear();
  }

 private:
  static constexpr std::size_t kAbsent = SIZE_MAX;

  void run(VertexId x, Fan& f) {
    const std::size_t k = c_.palette_size();
    const Multigraph& g = c_.host();
    Color beta = 0;
    while (beta < k && !c_.misses(x, beta)) ++beta;
    if (beta == k) throw std::logic_error("vizing: center saturated, palette too small");

    for (std::size_t t = 0; t < f.verts.size(); ++t) {
      const VertexId v = f.verts[t];
      for (Color col = 0; col < k; ++col) {
        if (c_.misses(x, col) && c_.misses(v, col)) {
          shift_fan(c_, f, t);
          c_.assign(f.entry[t], col);
          return;
        }
      }
      for (Color col = 0; col < k; ++col) {
        if (c_.misses(v, col) && owner_[col] != kAbsent) {
          flip_and_shift(x, f, owner_[col], t, col, beta);
          return;
        }
      }
      for (Color col = 0; col < k; ++col) {
        if (!c_.misses(v, col)) continue;
        owner_[col] = t;
        touched_.push_back(col);
        const EdgeId e = *c_.edge_at(x, col);
        const VertexId w = g.endpoints(e).other(x);
        if (fan_index_[w] == kAbsent) {
          fan_index_[w] = f.verts.size();
          f.verts.push_back(w);
          f.entry.push_back(e);
          f.parent.push_back(t);
        }
      }
    }
    // An elementary maximal fan needs more than mu*|fan| edges from x into
    // the fan, which a palette of Delta + mu rules out.
    throw std::logic_error("vizing: elementary maximal fan reached; palette below max_degree + multiplicity");
  }

  // verts[s] and verts[t] (s < t) both miss alpha; beta is missing at x and
  // at neither of them. Flip the (alpha, beta) chain of whichever one is not
  // linked to x, then shift to it and use beta.
  void flip_and_shift(VertexId x, const Fan& f, std::size_t s, std::size_t t, Color alpha, Color beta) {
    auto path = kempe_path(c_, f.verts[s], alpha, beta);
    std::size_t chosen = s;
    if (path_end(c_, f.verts[s], path) == x) {
      chosen = t;
      path = kempe_path(c_, f.verts[t], alpha, beta);
    }
    swap_colors(c_, path, alpha, beta);
    shift_fan(c_, f, chosen);
    c_.assign(f.entry[chosen], beta);
  }

  PartialColoring& c_;
  std::vector<std::size_t> fan_index_;
  std::vector<std::size_t> owner_;
  std::vector<Color> touched_;
};

std::vector<char> side_marks(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  x.check_range(g.num_vertices());
  y.check_range(g.num_vertices());
  std::vector<char> side(g.num_vertices(), 0);
  for (VertexId v : x) side[v] = 1;
  for (VertexId v : y) {
    if (side[v]) throw std::invalid_argument("bipartition sides overlap at vertex " + std::to_string(v));
    side[v] = 2;
  }
  return side;
}

void copy_with_offset(const PartialColoring& from, PartialColoring& to, Color offset) {
  for (EdgeId e : from.host().edge_ids()) {
    if (auto col = from.color_of(e)) to.assign(e, *col + offset);
  }
}

void konig_into(const Multigraph& h, const VertexSet& x, const VertexSet& y, std::size_t delta, Color offset,
                PartialColoring& out) {
  if (h.num_edges() == 0) return;
  if (delta % 2 == 1) {
    copy_with_offset(konig_color_alternating(h, x, y), out, offset);
    return;
  }
  auto [first, second] = euler_split(h, x, y);
  const std::size_t half = delta / 2;
  konig_into(first, x, y, half, offset, out);
  konig_into(second, x, y, half, offset + static_cast<Color>(half), out);
}

}  // namespace

PartialColoring vizing_color(const Multigraph& g, std::size_t r) {
  const std::size_t mu = g.multiplicity();
  if (mu > r) {
    throw std::invalid_argument("vizing_color: multiplicity " + std::to_string(mu) + " exceeds r = " +
                                std::to_string(r));
  }
  PartialColoring c(g, g.max_degree() + r);
  VizingInserter inserter(c);
  for (EdgeId e : g.edge_ids()) inserter.insert(e);
  return c;
}

void require_bipartite(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  const auto side = side_marks(g, x, y);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ends = g.endpoints(e);
    if (!side[ends.u] || !side[ends.v] || side[ends.u] == side[ends.v]) {
      throw std::invalid_argument("edge " + std::to_string(e) + " (" + std::to_string(ends.u) + "," +
                                  std::to_string(ends.v) + ") does not cross the bipartition");
    }
  }
}

PartialColoring konig_color_alternating(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  require_bipartite(g, x, y);
  PartialColoring c(g, g.max_degree());
  const std::size_t k = c.palette_size();
  const auto first_missing = [&](VertexId v) {
    Color col = 0;
    while (col < k && !c.misses(v, col)) ++col;
    if (col == k) throw std::logic_error("konig: vertex saturated before all its edges were colored");
    return col;
  };
  for (EdgeId e : g.edge_ids()) {
    const Edge& ends = g.endpoints(e);
    const VertexId u = ends.u;
    const VertexId v = ends.v;
    const Color alpha = first_missing(u);
    if (!c.misses(v, alpha)) {
      // v misses some beta; its alpha/beta chain cannot reach u in a bipartite graph.
      const Color beta = first_missing(v);
      swap_colors(c, kempe_path(c, v, alpha, beta), alpha, beta);
    }
    c.assign(e, alpha);
  }
  return c;
}

std::pair<Multigraph, Multigraph> euler_split(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  require_bipartite(g, x, y);
  const std::size_t n = g.num_vertices();
  const VertexId dummy_x = static_cast<VertexId>(n);      // joined to odd vertices of y
  const VertexId dummy_y = static_cast<VertexId>(n + 1);  // joined to odd vertices of x

  struct AugEdge {
    VertexId u, v;
    EdgeId id;
    bool real;
  };
  std::vector<AugEdge> edges;
  edges.reserve(g.num_edges() + n + 1);
  for (EdgeId e : g.edge_ids()) edges.push_back({g.endpoints(e).u, g.endpoints(e).v, e, true});
  std::size_t odd_x = 0;
  for (VertexId v : x) {
    if (g.degree(v) % 2) {
      edges.push_back({v, dummy_y, 0, false});
      ++odd_x;
    }
  }
  for (VertexId v : y) {
    if (g.degree(v) % 2) edges.push_back({v, dummy_x, 0, false});
  }
  if (odd_x % 2) edges.push_back({dummy_x, dummy_y, 0, false});

  std::vector<std::vector<std::size_t>> adj(n + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back(i);
    adj[edges[i].v].push_back(i);
  }
  std::vector<std::size_t> next(n + 2, 0);
  std::vector<char> used(edges.size(), 0);
  std::vector<char> first_half(g.edge_id_bound(), 0);

  std::vector<std::pair<VertexId, std::size_t>> stack;
  std::vector<std::size_t> circuit;
  constexpr std::size_t kNoEdge = SIZE_MAX;
  for (VertexId start = 0; start < n + 2; ++start) {
    stack.assign(1, {start, kNoEdge});
    circuit.clear();
    while (!stack.empty()) {
      const VertexId v = stack.back().first;
      auto& p = next[v];
      while (p < adj[v].size() && used[adj[v][p]]) ++p;
      if (p < adj[v].size()) {
        const std::size_t ei = adj[v][p];
        used[ei] = 1;
        const VertexId w = edges[ei].u == v ? edges[ei].v : edges[ei].u;
        stack.push_back({w, ei});
      } else {
        if (stack.back().second != kNoEdge) circuit.push_back(stack.back().second);
        stack.pop_back();
      }
    }
    // Closed trails in a bipartite graph have even length, so alternating
    // along the trail splits every vertex's degree evenly.
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      const AugEdge& ae = edges[circuit[i]];
      if (ae.real && i % 2 == 0) first_half[ae.id] = 1;
    }
  }
  Multigraph a = g.filter([&](EdgeId e, const Edge&) { return first_half[e] != 0; });
  Multigraph b = g.filter([&](EdgeId e, const Edge&) { return first_half[e] == 0; });
  return {std::move(a), std::move(b)};
}

PartialColoring konig_color(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  require_bipartite(g, x, y);
  const std::size_t delta = g.max_degree();
  PartialColoring out(g, delta);
  konig_into(g, x, y, delta, 0, out);
  return out;
}

PartialColoring equalize(PartialColoring c, std::size_t k) {
  if (!c.is_total()) throw std::invalid_argument("equalize: coloring must be total");
  if (c.palette_size() > k) {
    throw std::invalid_argument("equalize: palette " + std::to_string(c.palette_size()) + " exceeds k = " +
                                std::to_string(k));
  }
  try {
    c.audit();
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(std::string("equalize: improper input: ") + err.what());
  }
  const Multigraph& g = c.host();
  if (k == 0) {
    if (g.num_edges() > 0) throw std::invalid_argument("equalize: k = 0 with edges present");
    return c;
  }
  c.extend_palette(k);
  auto sizes = c.class_sizes();
  for (;;) {
    const auto large = static_cast<Color>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    const auto small = static_cast<Color>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
    if (sizes[large] - sizes[small] <= 1) break;
    bool flipped = false;
    for (VertexId v = 0; v < g.num_vertices() && !flipped; ++v) {
      if (c.misses(v, large) || !c.misses(v, small)) continue;
      const auto path = kempe_path(c, v, large, small);
      if (path.size() % 2 == 1) {
        swap_colors(c, path, large, small);
        --sizes[large];
        ++sizes[small];
        flipped = true;
      }
    }
    // Some (large, small) component has one more large edge than small ones.
    if (!flipped) throw std::logic_error("equalize: no unbalanced two-color path found");
  }
  return c;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(std::vector<std::vector<std::size_t>> adj, std::size_t right)
      : adj_(std::move(adj)), mate_left_(adj_.size(), kFree), mate_right_(right, kFree), dist_(adj_.size()) {}

  void run() {
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (mate_left_[u] == kFree) dfs(u);
      }
    }
  }

  static constexpr std::size_t kFree = SIZE_MAX;
  const std::vector<std::size_t>& mate_left() const { return mate_left_; }
  const std::vector<std::size_t>& mate_right() const { return mate_right_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = mate_left_[u] == kFree ? 0 : kFree;
      if (dist_[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t w : adj_[u]) {
        const std::size_t m = mate_right_[w];
        if (m == kFree) {
          found = true;
        } else if (dist_[m] == kFree) {
          dist_[m] = dist_[u] + 1;
          q.push(m);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t w : adj_[u]) {
      const std::size_t m = mate_right_[w];
      if (m == kFree || (dist_[m] == dist_[u] + 1 && dfs(m))) {
        mate_left_[u] = w;
        mate_right_[w] = u;
        return true;
      }
    }
    dist_[u] = kFree;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

MatchingWitness hall_matching(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  require_bipartite(g, x, y);
  const auto xs = x.members();
  const auto ys = y.members();
  std::vector<std::size_t> y_index(g.num_vertices(), SIZE_MAX);
  for (std::size_t i = 0; i < ys.size(); ++i) y_index[ys[i]] = i;

  // Simplified graph: one representative (lowest id) per adjacent pair.
  std::vector<std::vector<std::size_t>> adj(xs.size());
  std::vector<std::map<std::size_t, EdgeId>> rep(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& inc : g.incident(xs[i])) {
      const std::size_t j = y_index[inc.neighbor];
      auto [it, inserted] = rep[i].emplace(j, inc.edge);
      if (!inserted) it->second = std::min(it->second, inc.edge);
    }
    for (const auto& [j, e] : rep[i]) adj[i].push_back(j);
  }

  HopcroftKarp hk(adj, ys.size());
  hk.run();
  const auto& mate = hk.mate_left();

  MatchingWitness out;
  if (std::none_of(mate.begin(), mate.end(), [](std::size_t m) { return m == HopcroftKarp::kFree; })) {
    out.covers_x = true;
    for (std::size_t i = 0; i < xs.size(); ++i) out.matching.push_back(rep[i].at(mate[i]));
    std::sort(out.matching.begin(), out.matching.end());
    return out;
  }

  // X-vertices reachable from free ones by alternating paths form a Hall violator.
  std::vector<char> in_s(xs.size(), 0);
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (mate[i] == HopcroftKarp::kFree) {
      in_s[i] = 1;
      q.push(i);
    }
  }
  while (!q.empty()) {
    const std::size_t i = q.front();
    q.pop();
    for (std::size_t j : adj[i]) {
      const std::size_t m = hk.mate_right()[j];
      if (m != HopcroftKarp::kFree && !in_s[m]) {
        in_s[m] = 1;
        q.push(m);
      }
    }
  }
  std::vector<VertexId> s;
  std::vector<char> in_n(g.num_vertices(), 0);
  std::vector<VertexId> nbrs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!in_s[i]) continue;
    s.push_back(xs[i]);
    for (const auto& inc : g.incident(xs[i])) {
      if (!in_n[inc.neighbor]) {
        in_n[inc.neighbor] = 1;
        nbrs.push_back(inc.neighbor);
      }
    }
  }
  if (nbrs.size() >= s.size()) throw std::logic_error("hall_matching: deficiency set failed verification");
  out.deficiency = VertexSet(std::move(s));
  out.neighbors = VertexSet(std::move(nbrs));
  return out;
}

}  // namespace onefact
