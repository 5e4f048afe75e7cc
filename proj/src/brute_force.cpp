#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "onefact/verify.hpp"

namespace onefact {

namespace {

// Remaining pair multiplicities of a small multigraph, packed one byte per pair.
class SmallState {
 public:
  SmallState(const Multigraph& g, OracleLimits limits) : n_(g.num_vertices()) {
    if (n_ > limits.max_order || n_ > 16) {
      throw std::invalid_argument("oracle cutoff: order " + std::to_string(n_) + " exceeds " +
                                  std::to_string(limits.max_order));
    }
    counts_.assign(n_ * (n_ - (n_ ? 1 : 0)) / 2, 0);
    deg_.assign(n_, 0);
    g.for_each_pair([&](VertexId u, VertexId v, std::span<const EdgeId> ids) {
      if (ids.size() > 255) throw std::invalid_argument("oracle cutoff: pair multiplicity above 255");
      counts_[index(u, v)] = static_cast<char>(ids.size());
      deg_[u] += ids.size();
      deg_[v] += ids.size();
    });
    inside_.resize(std::size_t{1} << n_);
  }

  std::size_t order() const { return n_; }
  const std::string& key() const { return counts_; }
  unsigned count(VertexId u, VertexId v) const { return static_cast<unsigned char>(counts_[index(u, v)]); }
  std::size_t degree(VertexId v) const { return deg_[v]; }

  void remove(const PairFactor& m) {
    for (auto [u, v] : m) {
      --counts_[index(u, v)];
      --deg_[u];
      --deg_[v];
    }
  }
  void restore(const PairFactor& m) {
    for (auto [u, v] : m) {
      ++counts_[index(u, v)];
      ++deg_[u];
      ++deg_[v];
    }
  }

  // Every perfect matching crosses each odd vertex set, so the smallest odd
  // cut bounds the number of disjoint perfect matchings left.
  std::size_t min_odd_cut() {
    if (n_ == 0) return 0;
    const std::size_t full = (std::size_t{1} << n_) - 1;
    std::size_t best = SIZE_MAX;
    inside_[0] = 0;
    std::vector<std::size_t> degsum(std::size_t{1} << n_, 0);
    for (std::size_t mask = 1; mask <= full; ++mask) {
      const auto v = static_cast<VertexId>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      std::size_t add = 0;
      for (std::size_t m = rest; m; m &= m - 1) add += count(v, static_cast<VertexId>(std::countr_zero(m)));
      inside_[mask] = inside_[rest] + add;
      degsum[mask] = degsum[rest] + deg_[v];
      if ((mask & 1) && mask != full && std::popcount(mask) % 2 == 1) {
        best = std::min(best, degsum[mask] - 2 * inside_[mask]);
      }
    }
    return best;
  }

  // Calls visit(matching) for each perfect matching of the support; stops
  // early when visit returns true.
  bool for_each_perfect_matching(const std::function<bool(const PairFactor&)>& visit) {
    PairFactor current;
    return enumerate(0, current, visit);
  }

 private:
  std::size_t index(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
  }

  bool enumerate(std::size_t covered, PairFactor& current, const std::function<bool(const PairFactor&)>& visit) {
    const std::size_t full = (std::size_t{1} << n_) - 1;
    if (covered == full) return visit(current);
    // Branch on the uncovered vertex with the fewest options.
    VertexId pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (VertexId v = 0; v < n_; ++v) {
      if (covered >> v & 1) continue;
      std::size_t options = 0;
      for (VertexId w = 0; w < n_; ++w) {
        if (w != v && !(covered >> w & 1) && count(v, w)) ++options;
      }
      if (options < fewest) {
        fewest = options;
        pick = v;
      }
    }
    if (fewest == 0) return false;
    for (VertexId w = 0; w < n_; ++w) {
      if (w == pick || (covered >> w & 1) || !count(pick, w)) continue;
      current.emplace_back(std::min(pick, w), std::max(pick, w));
      if (enumerate(covered | (std::size_t{1} << pick) | (std::size_t{1} << w), current, visit)) return true;
      current.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::string counts_;
  std::vector<std::size_t> deg_;
  std::vector<std::size_t> inside_;
};

}  // namespace

std::optional<Factorization> brute_force_factorize(const Multigraph& g, OracleLimits limits) {
  SmallState state(g, limits);
  const auto d = g.is_regular();
  if (!d) return std::nullopt;
  if (*d > 0 && g.num_vertices() % 2) return std::nullopt;

  std::unordered_set<std::string> dead;
  std::vector<PairFactor> chosen;
  std::function<bool(std::size_t)> solve = [&](std::size_t remaining) -> bool {
    if (remaining == 0) return true;
    if (dead.count(state.key())) return false;
    if (state.min_odd_cut() < remaining) {
      dead.insert(state.key());
      return false;
    }
    const bool found = state.for_each_perfect_matching([&](const PairFactor& m) {
      state.remove(m);
      chosen.push_back(m);
      if (solve(remaining - 1)) return true;
      chosen.pop_back();
      state.restore(m);
      return false;
    });
    if (!found) dead.insert(state.key());
    return found;
  };
  if (!solve(*d)) return std::nullopt;

  auto lifted = assign_edge_ids(g, chosen);
  if (!lifted.violations.empty()) throw std::logic_error("brute_force_factorize: lifting failed");
  return std::move(lifted.factorization);
}

std::size_t max_disjoint_factors(const Multigraph& g, OracleLimits limits) {
  SmallState state(g, limits);
  if (g.num_vertices() == 0 || g.num_vertices() % 2) return 0;
  std::unordered_map<std::string, std::size_t> memo;
  std::function<std::size_t()> best = [&]() -> std::size_t {
    if (auto it = memo.find(state.key()); it != memo.end()) return it->second;
    std::size_t bound = state.min_odd_cut();
    for (VertexId v = 0; v < state.order(); ++v) bound = std::min(bound, state.degree(v));
    std::size_t result = 0;
    if (bound > 0) {
      state.for_each_perfect_matching([&](const PairFactor& m) {
        state.remove(m);
        result = std::max(result, 1 + best());
        state.restore(m);
        return result == bound;
      });
    }
    memo.emplace(state.key(), result);
    return result;
  };
  return best();
}

}  // namespace onefact
