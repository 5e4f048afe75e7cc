#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onefact/multigraph.hpp"

namespace onefact {

using Seed = std::uint64_t;

// Equal-size vertex bipartition with the per-vertex |d_A(v) - d_B(v)| ledger.
struct Partition {
  VertexSet a;
  VertexSet b;
  std::vector<std::size_t> deviations;  // by vertex
  double bound = 0.0;                   // cap the split was checked against

  std::size_t max_deviation() const;
  bool in_a(VertexId v) const { return a.contains(v); }
};

// side[v] != 0 means v is in A. Serial reference and OpenMP kernel.
std::vector<std::size_t> compute_deviations_serial(const Multigraph& g, const std::vector<char>& side);
std::vector<std::size_t> compute_deviations(const Multigraph& g, const std::vector<char>& side);

// Pairs (2i, 2i+1); one fair coin per pair decides which member goes to A.
// Throws std::invalid_argument for odd order.
Partition random_split(const Multigraph& g, Seed seed);

// Seed used by retry `attempt` of balanced_split.
Seed split_attempt_seed(Seed seed, std::size_t attempt);

struct SplitOutcome {
  bool ok = false;
  // The first passing split when ok; otherwise the split with the smallest
  // max deviation seen (lowest attempt index on ties).
  Partition partition;
  std::size_t attempts = 0;  // attempts consumed up to and including the chosen one, or all when !ok
};

// Las Vegas split: the first attempt (by index) whose max deviation is
// strictly below `bound`. Attempts are evaluated in parallel batches; the
// result equals balanced_split_serial for the same arguments.
SplitOutcome balanced_split(const Multigraph& g, double bound, std::size_t max_retries, Seed seed);
SplitOutcome balanced_split_serial(const Multigraph& g, double bound, std::size_t max_retries, Seed seed);

// n^{2/3} for order 2n.
double default_split_bound(std::size_t n);

}  // namespace onefact
