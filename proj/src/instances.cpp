#include "onefact/instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace onefact {

namespace {

std::mt19937_64 make_rng(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

// Fisher-Yates with plain modulo draws so the sequence depends only on mt19937_64.
template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(items[i - 1], items[j]);
  }
}

class PairCounts {
 public:
  explicit PairCounts(std::size_t n) : n_(n), counts_(n * n, 0) {}
  std::size_t& at(VertexId u, VertexId v) { return counts_[static_cast<std::size_t>(std::min(u, v)) * n_ + std::max(u, v)]; }

  Multigraph build() const {
    Multigraph g(n_);
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u + 1; v < n_; ++v) {
        const std::size_t c = counts_[static_cast<std::size_t>(u) * n_ + v];
        if (c) g.add_edges(u, v, c);
      }
    }
    return g;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> counts_;
};

}  // namespace

Multigraph extremal_graph(std::size_t n, std::size_t r, bool allow_r1) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("extremal_graph: n must be odd and >= 3");
  if (r == 0) throw std::invalid_argument("extremal_graph: r must be positive");
  if (r == 1 && !allow_r1) throw std::invalid_argument("extremal_graph: r = 1 needs the disjoint-cliques flag");
  Multigraph g(2 * n);
  for (VertexId side = 0; side < 2; ++side) {
    const auto base = static_cast<VertexId>(side * n);
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j) g.add_edges(base + i, base + j, r);
    }
  }
  if (r > 1) {
    for (VertexId i = 0; i < n; ++i) g.add_edges(i, static_cast<VertexId>(n + i), r - 1);
  }
  return g;
}

PairFactorization round_robin(std::size_t n2) {
  if (n2 < 2 || n2 % 2) throw std::invalid_argument("round_robin: order must be even and >= 2");
  const std::size_t m = n2 - 1;
  PairFactorization out(m);
  for (std::size_t round = 0; round < m; ++round) {
    auto& f = out[round];
    f.emplace_back(static_cast<VertexId>(round), static_cast<VertexId>(m));
    for (std::size_t k = 1; k < n2 / 2; ++k) {
      const auto a = static_cast<VertexId>((round + k) % m);
      const auto b = static_cast<VertexId>((round + m - k) % m);
      f.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(f.begin(), f.end());
  }
  return out;
}

Multigraph graph_from_factors(std::size_t num_vertices, const PairFactorization& factors) {
  PairCounts counts(num_vertices);
  for (const auto& f : factors) {
    for (const auto& [u, v] : f) {
      if (u >= num_vertices || v >= num_vertices || u == v) {
        throw std::invalid_argument("graph_from_factors: bad pair");
      }
      ++counts.at(u, v);
    }
  }
  return counts.build();
}

Multigraph regular_from_factors(std::size_t n2, std::size_t d, std::size_t r, Seed seed) {
  if (n2 < 2 || n2 % 2) throw std::invalid_argument("regular_from_factors: n2 must be even and >= 2");
  if (r == 0) throw std::invalid_argument("regular_from_factors: r must be positive");
  if (d > r * (n2 - 1)) {
    throw std::invalid_argument("regular_from_factors: degree " + std::to_string(d) + " exceeds r*(n2-1) = " +
                                std::to_string(r * (n2 - 1)));
  }
  const auto base = round_robin(n2);
  std::vector<std::size_t> pool;
  pool.reserve(base.size() * r);
  for (std::size_t f = 0; f < base.size(); ++f) pool.insert(pool.end(), r, f);
  auto rng = make_rng(seed);
  shuffle_in_place(pool, rng);
  PairFactorization chosen;
  chosen.reserve(d);
  for (std::size_t i = 0; i < d; ++i) chosen.push_back(base[pool[i]]);
  return graph_from_factors(n2, chosen);
}

Multigraph edge_swap_shuffle(const Multigraph& g, std::size_t r, std::size_t attempts, Seed seed) {
  if (g.multiplicity() > r) throw std::invalid_argument("edge_swap_shuffle: multiplicity exceeds r");
  const std::size_t n = g.num_vertices();
  PairCounts counts(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.num_edges());
  for (EdgeId e : g.edge_ids()) {
    const Edge& ends = g.endpoints(e);
    ++counts.at(ends.u, ends.v);
    edges.emplace_back(ends.u, ends.v);
  }
  if (edges.size() < 2) return counts.build();
  auto rng = make_rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t i = rng() % edges.size();
    const std::size_t j = rng() % edges.size();
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, e] = edges[j];
    if (rng() & 1) std::swap(c, e);
    if (a == c || a == e || b == c || b == e) continue;
    if (counts.at(a, c) >= r || counts.at(b, e) >= r) continue;
    --counts.at(a, b);
    --counts.at(c, e);
    ++counts.at(a, c);
    ++counts.at(b, e);
    edges[i] = {a, c};
    edges[j] = {b, e};
  }
  return counts.build();
}

Multigraph random_bipartite_regular(std::size_t n, std::size_t d, std::size_t r, Seed seed) {
  if (n == 0) throw std::invalid_argument("random_bipartite_regular: n must be positive");
  if (r == 0) throw std::invalid_argument("random_bipartite_regular: r must be positive");
  if (d > r * n) throw std::invalid_argument("random_bipartite_regular: degree exceeds r*n");
  auto rng = make_rng(seed);
  std::vector<std::size_t> capacity(n * n, r);  // x-major
  std::vector<std::size_t> used(n * n, 0);
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> mate_y(n);
  std::vector<char> seen(n);
  std::vector<std::vector<std::size_t>> adj(n);

  for (std::size_t round = 0; round < d; ++round) {
    // The spare-capacity graph is (rn - round)-regular, so a perfect matching exists.
    for (std::size_t x = 0; x < n; ++x) {
      adj[x].clear();
      for (std::size_t y = 0; y < n; ++y) {
        if (capacity[x * n + y]) adj[x].push_back(y);
      }
      shuffle_in_place(adj[x], rng);
    }
    std::iota(order.begin(), order.end(), 0);
    shuffle_in_place(order, rng);
    std::fill(mate_y.begin(), mate_y.end(), SIZE_MAX);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (mate_y[y] == SIZE_MAX || augment(mate_y[y])) {
          mate_y[y] = x;
          return true;
        }
      }
      return false;
    };
    for (std::size_t x : order) {
      std::fill(seen.begin(), seen.end(), 0);
      if (!augment(x)) throw std::logic_error("random_bipartite_regular: no perfect matching in spare capacity");
    }
    for (std::size_t y = 0; y < n; ++y) {
      --capacity[mate_y[y] * n + y];
      ++used[mate_y[y] * n + y];
    }
  }
  Multigraph g(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (used[x * n + y]) g.add_edges(static_cast<VertexId>(x), static_cast<VertexId>(n + y), used[x * n + y]);
    }
  }
  return g;
}

}  // namespace onefact
