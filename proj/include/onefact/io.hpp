#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onefact/instances.hpp"
#include "onefact/multigraph.hpp"

namespace onefact {

// Malformed input; `line` is 1-based, 0 when not tied to one line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

// Graph text format:
//   c <comment>
//   p mg <num_vertices> <num_edge_lines>
//   e <u> <v> <mult>     (0-based, one line per unordered pair)
Multigraph read_graph(std::istream& in);
// Pairs are written with u < v in ascending order. Each comment becomes one `c` line.
void write_graph(std::ostream& out, const Multigraph& g, const std::vector<std::string>& comments = {});

// Factorization text format:
//   f <num_factors> <num_vertices>
//   m <u1> <v1> <u2> <v2> ...
struct FactorFile {
  std::size_t num_vertices = 0;
  PairFactorization factors;
};
FactorFile read_factorization(std::istream& in);
// Each factor's pairs are written sorted, each pair as min max.
void write_factorization(std::ostream& out, std::size_t num_vertices, const PairFactorization& factors);

}  // namespace onefact
