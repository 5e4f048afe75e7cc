#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onefact/instances.hpp"
#include "onefact/multigraph.hpp"

namespace onefact {

// Ordered list of edge-id sets; a 1-factorization when every set is a
// perfect matching and the sets partition E(G).
struct Factorization {
  std::vector<std::vector<EdgeId>> factors;
};

enum class ViolationKind { kNotMatching, kNotPerfect, kOverlap, kNotPartition, kWrongCount };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t factor = SIZE_MAX;  // SIZE_MAX when not tied to one factor
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;  // every failure found, not just the first
};

// Per-factor checks run in parallel; the report is identical to the serial one.
VerificationReport verify_factorization(const Multigraph& g, const Factorization& f);
VerificationReport verify_factorization_serial(const Multigraph& g, const Factorization& f);

// Maps pair-listed factors to edge ids, taking the lowest unused parallel
// edge for each listed pair. Pairs that are absent from g or listed more
// often than their multiplicity become violations.
struct PairAssignment {
  Factorization factorization;
  std::vector<Violation> violations;
};
PairAssignment assign_edge_ids(const Multigraph& g, const PairFactorization& pairs);

PairFactorization to_pairs(const Multigraph& g, const Factorization& f);

// Exhaustive oracles. Exponential, so inputs above the cutoff are rejected
// with std::invalid_argument.
struct OracleLimits {
  std::size_t max_order = 12;
};

// Backtracking over perfect matchings with memoized dead states and an
// odd-cut bound. Returns a factorization iff one exists.
std::optional<Factorization> brute_force_factorize(const Multigraph& g, OracleLimits limits = {});

// Largest number of pairwise edge-disjoint perfect matchings.
std::size_t max_disjoint_factors(const Multigraph& g, OracleLimits limits = {});

}  // namespace onefact
