#include "onefact/splitter.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace onefact {

std::size_t Partition::max_deviation() const {
  return deviations.empty() ? 0 : *std::max_element(deviations.begin(), deviations.end());
}

namespace {

std::size_t vertex_deviation(const Multigraph& g, const std::vector<char>& side, VertexId v) {
  std::size_t into_a = 0;
  std::size_t into_b = 0;
  for (const auto& inc : g.incident(v)) {
    if (side[inc.neighbor]) {
      ++into_a;
    } else {
      ++into_b;
    }
  }
  return into_a > into_b ? into_a - into_b : into_b - into_a;
}

void require_even(const Multigraph& g) {
  if (g.num_vertices() % 2) {
    throw std::invalid_argument("split: order " + std::to_string(g.num_vertices()) + " is odd");
  }
}

std::vector<char> coin_sides(std::size_t order, Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<char> side(order, 0);
  for (std::size_t i = 0; i + 1 < order; i += 2) {
    const bool first_in_a = (rng() >> 63) != 0;
    side[i] = first_in_a ? 1 : 0;
    side[i + 1] = first_in_a ? 0 : 1;
  }
  return side;
}

Partition make_partition(const std::vector<char>& side, std::vector<std::size_t> deviations, double bound) {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  for (VertexId v = 0; v < side.size(); ++v) (side[v] ? a : b).push_back(v);
  return Partition{VertexSet(std::move(a)), VertexSet(std::move(b)), std::move(deviations), bound};
}

bool better(const Partition& candidate, const Partition& incumbent) {
  return candidate.max_deviation() < incumbent.max_deviation();
}

}  // namespace

std::vector<std::size_t> compute_deviations_serial(const Multigraph& g, const std::vector<char>& side) {
  std::vector<std::size_t> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = vertex_deviation(g, side, v);
  return out;
}

std::vector<std::size_t> compute_deviations(const Multigraph& g, const std::vector<char>& side) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  std::vector<std::size_t> out(g.num_vertices());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    out[v] = vertex_deviation(g, side, static_cast<VertexId>(v));
  }
  return out;
}

Partition random_split(const Multigraph& g, Seed seed) {
  require_even(g);
  const auto side = coin_sides(g.num_vertices(), seed);
  return make_partition(side, compute_deviations_serial(g, side), 0.0);
}

Seed split_attempt_seed(Seed seed, std::size_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<Seed>(words[0]) << 32) | words[1];
}

SplitOutcome balanced_split_serial(const Multigraph& g, double bound, std::size_t max_retries, Seed seed) {
  require_even(g);
  if (!(bound > 0.0)) throw std::invalid_argument("balanced_split: bound must be positive");
  SplitOutcome out;
  for (std::size_t t = 0; t < std::max<std::size_t>(max_retries, 1); ++t) {
    const auto side = coin_sides(g.num_vertices(), split_attempt_seed(seed, t));
    Partition p = make_partition(side, compute_deviations_serial(g, side), bound);
    if (static_cast<double>(p.max_deviation()) < bound) {
      return {true, std::move(p), t + 1};
    }
    if (t == 0 || better(p, out.partition)) out.partition = std::move(p);
    out.attempts = t + 1;
  }
  return out;
}

SplitOutcome balanced_split(const Multigraph& g, double bound, std::size_t max_retries, Seed seed) {
  require_even(g);
  if (!(bound > 0.0)) throw std::invalid_argument("balanced_split: bound must be positive");
  const std::size_t total = std::max<std::size_t>(max_retries, 1);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  SplitOutcome out;
  std::vector<Partition> results;
  for (std::size_t first = 0; first < total; first += batch) {
    const std::size_t count = std::min(batch, total - first);
    results.assign(count, Partition{});
#pragma omp parallel for schedule(static, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto side = coin_sides(g.num_vertices(), split_attempt_seed(seed, first + i));
      results[i] = make_partition(side, compute_deviations_serial(g, side), bound);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t t = first + i;
      if (static_cast<double>(results[i].max_deviation()) < bound) {
        return {true, std::move(results[i]), t + 1};
      }
      if (t == 0 || better(results[i], out.partition)) out.partition = std::move(results[i]);
      out.attempts = t + 1;
    }
  }
  return out;
}

double default_split_bound(std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::cbrt(nn * nn);
}

}  // namespace onefact
