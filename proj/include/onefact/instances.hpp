#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "onefact/multigraph.hpp"
#include "onefact/splitter.hpp"

namespace onefact {

// A perfect matching listed as vertex pairs, and a list of them.
using PairFactor = std::vector<std::pair<VertexId, VertexId>>;
using PairFactorization = std::vector<PairFactor>;

// Two cliques A = 0..n-1 and B = n..2n-1 with every clique edge repeated r
// times, plus i -- n+i repeated r-1 times. Regular of degree rn-1 and not
// 1-factorizable for odd n. With r == 1 the matching vanishes and the result
// is two disjoint K_n; that case must be requested with `allow_r1`.
Multigraph extremal_graph(std::size_t n, std::size_t r, bool allow_r1 = false);

// Circle-method 1-factorization of K_{n2}: n2-1 perfect matchings.
PairFactorization round_robin(std::size_t n2);

// Union of d factors of round_robin(n2), each used at most r times; the
// factor multiset is drawn with `seed`. Regular of degree d, multiplicity <= r.
Multigraph regular_from_factors(std::size_t n2, std::size_t d, std::size_t r, Seed seed);

// Randomized 2-edge switches (a-b, c-e) -> (a-c, b-e) that keep every degree
// and keep multiplicity <= r. `attempts` switch proposals are made.
Multigraph edge_swap_shuffle(const Multigraph& g, std::size_t r, std::size_t attempts, Seed seed);

// Bipartite d-regular multigraph on X = 0..n-1, Y = n..2n-1 with
// multiplicity <= r: the union of d perfect matchings, each drawn at random
// from the pairs that still have spare capacity.
Multigraph random_bipartite_regular(std::size_t n, std::size_t d, std::size_t r, Seed seed);

// Builds the multigraph whose edges are the pairs of all factors.
Multigraph graph_from_factors(std::size_t num_vertices, const PairFactorization& factors);

}  // namespace onefact
