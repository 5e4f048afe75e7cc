#include "onefact/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace onefact {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotMatching: return "not-matching";
    case ViolationKind::kNotPerfect: return "not-perfect";
    case ViolationKind::kOverlap: return "overlap";
    case ViolationKind::kNotPartition: return "not-partition";
    case ViolationKind::kWrongCount: return "wrong-count";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (factor != SIZE_MAX) out << " factor=" << factor;
  if (!edges.empty()) {
    out << " edges=";
    for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? "," : "") << edges[i];
  }
  if (!vertices.empty()) {
    out << " vertices=";
    for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? "," : "") << vertices[i];
  }
  return out.str();
}

namespace {

// Matching and coverage checks for one factor.
std::vector<Violation> check_factor(const Multigraph& g, const std::vector<EdgeId>& factor, std::size_t index) {
  std::vector<Violation> out;
  std::vector<EdgeId> cover(g.num_vertices(), UINT32_MAX);
  std::vector<EdgeId> foreign;
  Violation clash{ViolationKind::kNotMatching, index, {}, {}};
  for (EdgeId e : factor) {
    if (!g.contains_edge(e)) {
      foreign.push_back(e);
      continue;
    }
    const Edge& ends = g.endpoints(e);
    for (VertexId v : {ends.u, ends.v}) {
      if (cover[v] != UINT32_MAX) {
        clash.vertices.push_back(v);
        clash.edges.push_back(cover[v]);
        clash.edges.push_back(e);
      } else {
        cover[v] = e;
      }
    }
  }
  if (!foreign.empty()) out.push_back({ViolationKind::kNotPartition, index, std::move(foreign), {}});
  if (!clash.vertices.empty()) out.push_back(std::move(clash));
  Violation missed{ViolationKind::kNotPerfect, index, {}, {}};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (cover[v] == UINT32_MAX) missed.vertices.push_back(v);
  }
  if (!missed.vertices.empty()) out.push_back(std::move(missed));
  return out;
}

// Overlap, coverage of E(G), and factor count.
void check_global(const Multigraph& g, const Factorization& f, std::vector<Violation>& out) {
  std::vector<std::size_t> uses(g.edge_id_bound(), 0);
  for (const auto& factor : f.factors) {
    for (EdgeId e : factor) {
      if (g.contains_edge(e)) ++uses[e];
    }
  }
  Violation overlap{ViolationKind::kOverlap, SIZE_MAX, {}, {}};
  Violation unused{ViolationKind::kNotPartition, SIZE_MAX, {}, {}};
  for (EdgeId e : g.edge_ids()) {
    if (uses[e] > 1) overlap.edges.push_back(e);
    if (uses[e] == 0) unused.edges.push_back(e);
  }
  if (!overlap.edges.empty()) out.push_back(std::move(overlap));
  if (!unused.edges.empty()) out.push_back(std::move(unused));
  if (auto d = g.is_regular(); d && *d != f.factors.size()) {
    out.push_back({ViolationKind::kWrongCount, SIZE_MAX, {}, {}});
  }
}

VerificationReport finish(std::vector<Violation> violations) {
  VerificationReport report;
  report.ok = violations.empty();
  report.violations = std::move(violations);
  return report;
}

}  // namespace

VerificationReport verify_factorization_serial(const Multigraph& g, const Factorization& f) {
  std::vector<Violation> all;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    auto part = check_factor(g, f.factors[i], i);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  check_global(g, f, all);
  return finish(std::move(all));
}

VerificationReport verify_factorization(const Multigraph& g, const Factorization& f) {
  std::vector<std::vector<Violation>> per_factor(f.factors.size());
  const auto count = static_cast<std::int64_t>(f.factors.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    per_factor[i] = check_factor(g, f.factors[i], static_cast<std::size_t>(i));
  }
  std::vector<Violation> all;
  for (auto& part : per_factor) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  check_global(g, f, all);
  return finish(std::move(all));
}

PairAssignment assign_edge_ids(const Multigraph& g, const PairFactorization& pairs) {
  PairAssignment out;
  std::vector<char> taken(g.edge_id_bound(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<EdgeId> factor;
    for (const auto& [u, v] : pairs[i]) {
      if (u >= g.num_vertices() || v >= g.num_vertices() || u == v) {
        out.violations.push_back({ViolationKind::kNotMatching, i, {}, {u, v}});
        continue;
      }
      const auto parallel = g.edges_between(u, v);
      if (parallel.empty()) {
        out.violations.push_back({ViolationKind::kNotPartition, i, {}, {u, v}});
        continue;
      }
      auto it = std::find_if(parallel.begin(), parallel.end(), [&](EdgeId e) { return !taken[e]; });
      if (it == parallel.end()) {
        out.violations.push_back({ViolationKind::kOverlap, i, {}, {u, v}});
        continue;
      }
      taken[*it] = 1;
      factor.push_back(*it);
    }
    out.factorization.factors.push_back(std::move(factor));
  }
  return out;
}

PairFactorization to_pairs(const Multigraph& g, const Factorization& f) {
  PairFactorization out;
  out.reserve(f.factors.size());
  for (const auto& factor : f.factors) {
    PairFactor pf;
    for (EdgeId e : factor) {
      const Edge& ends = g.endpoints(e);
      pf.emplace_back(std::min(ends.u, ends.v), std::max(ends.u, ends.v));
    }
    std::sort(pf.begin(), pf.end());
    out.push_back(std::move(pf));
  }
  return out;
}

}  // namespace onefact
