#include "onefact/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace onefact {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      std::istringstream split(text);
      tokens.clear();
      for (std::string tok; split >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

  std::size_t number(const std::string& tok) const {
    std::size_t value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParseError(line_, "expected a non-negative integer, got '" + tok + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace

Multigraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(0, "missing 'p mg' header");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "mg") {
    throw ParseError(reader.line(), "expected 'p mg <num_vertices> <num_edge_lines>'");
  }
  const std::size_t nv = reader.number(tok[2]);
  const std::size_t lines = reader.number(tok[3]);
  if (nv > UINT32_MAX) throw ParseError(reader.line(), "too many vertices");
  Multigraph g(nv);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t count = 0;
  while (reader.next(tok)) {
    if (tok.size() != 4 || tok[0] != "e") throw ParseError(reader.line(), "expected 'e <u> <v> <mult>'");
    std::size_t u = reader.number(tok[1]);
    std::size_t v = reader.number(tok[2]);
    const std::size_t mult = reader.number(tok[3]);
    if (u >= nv || v >= nv) throw ParseError(reader.line(), "vertex out of range");
    if (u == v) throw ParseError(reader.line(), "loop at vertex " + std::to_string(u));
    if (mult == 0) throw ParseError(reader.line(), "multiplicity must be positive");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw ParseError(reader.line(), "pair " + std::to_string(u) + " " + std::to_string(v) + " repeated");
    }
    g.add_edges(static_cast<VertexId>(u), static_cast<VertexId>(v), mult);
    ++count;
  }
  if (count != lines) {
    throw ParseError(0, "header declares " + std::to_string(lines) + " edge lines, found " + std::to_string(count));
  }
  return g;
}

void write_graph(std::ostream& out, const Multigraph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  std::size_t lines = 0;
  g.for_each_pair([&](VertexId, VertexId, std::span<const EdgeId>) { ++lines; });
  out << "p mg " << g.num_vertices() << ' ' << lines << '\n';
  g.for_each_pair([&](VertexId u, VertexId v, std::span<const EdgeId> ids) {
    out << "e " << u << ' ' << v << ' ' << ids.size() << '\n';
  });
}

FactorFile read_factorization(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(0, "missing 'f' header");
  if (tok.size() != 3 || tok[0] != "f") throw ParseError(reader.line(), "expected 'f <num_factors> <num_vertices>'");
  FactorFile file;
  const std::size_t expected = reader.number(tok[1]);
  file.num_vertices = reader.number(tok[2]);
  while (reader.next(tok)) {
    if (tok[0] != "m" || tok.size() % 2 == 0) throw ParseError(reader.line(), "expected 'm <u1> <v1> ...'");
    PairFactor factor;
    for (std::size_t i = 1; i < tok.size(); i += 2) {
      const std::size_t u = reader.number(tok[i]);
      const std::size_t v = reader.number(tok[i + 1]);
      if (u >= file.num_vertices || v >= file.num_vertices) throw ParseError(reader.line(), "vertex out of range");
      factor.emplace_back(static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v)));
    }
    file.factors.push_back(std::move(factor));
  }
  if (file.factors.size() != expected) {
    throw ParseError(0, "header declares " + std::to_string(expected) + " factors, found " +
                            std::to_string(file.factors.size()));
  }
  return file;
}

void write_factorization(std::ostream& out, std::size_t num_vertices, const PairFactorization& factors) {
  out << "f " << factors.size() << ' ' << num_vertices << '\n';
  for (const auto& factor : factors) {
    PairFactor sorted;
    for (auto [u, v] : factor) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    out << 'm';
    for (auto [u, v] : sorted) out << ' ' << u << ' ' << v;
    out << '\n';
  }
}

}  // namespace onefact
