#include "onefact/factorizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "onefact/palette_algorithms.hpp"

namespace onefact {

namespace {

using Wide = unsigned __int128;

Wide pow_wide(Wide base, unsigned exp) {
  Wide out = 1;
  while (exp--) out *= base;
  return out;
}

// x < 2 n^{5/3}  <=>  x^3 < 8 n^5, for x >= 0.
bool below_two_n_five_thirds(Wide x, std::size_t n) { return pow_wide(x, 3) < 8 * pow_wide(n, 5); }

std::string fmt_double(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

std::vector<std::optional<Color>> snapshot(const PartialColoring& c) {
  const Multigraph& g = c.host();
  std::vector<std::optional<Color>> out(g.edge_id_bound());
  for (EdgeId e : g.edge_ids()) out[e] = c.color_of(e);
  return out;
}

// Copies the colorings of two halves into `out` at colors offset.., renaming
// B's colors so that classes of equal rank (by size, then index) coincide.
void merge_aligned(const PartialColoring& ca, const PartialColoring& cb, Color offset, PartialColoring& out) {
  const auto sizes_a = ca.class_sizes();
  const auto sizes_b = cb.class_sizes();
  if (sizes_a.size() != sizes_b.size()) throw std::logic_error("merge_aligned: palette mismatch");
  const auto ranked = [](const std::vector<std::size_t>& sizes) {
    std::vector<Color> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Color x, Color y) { return sizes[x] < sizes[y]; });
    return order;
  };
  const auto order_a = ranked(sizes_a);
  const auto order_b = ranked(sizes_b);
  std::vector<Color> rename_b(sizes_b.size());
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    if (sizes_a[order_a[i]] != sizes_b[order_b[i]]) {
      throw std::logic_error("merge_aligned: class size multisets differ");
    }
    rename_b[order_b[i]] = order_a[i];
  }
  for (EdgeId e : ca.host().edge_ids()) out.assign(e, *ca.color_of(e) + offset);
  for (EdgeId e : cb.host().edge_ids()) out.assign(e, rename_b[*cb.color_of(e)] + offset);
}

std::optional<EdgeId> uncolored_between(const PartialColoring& c, VertexId u, VertexId v) {
  for (EdgeId e : c.host().edges_between(u, v)) {
    if (!c.is_colored(e)) return e;
  }
  return std::nullopt;
}

// Vertices on the opposite side of `v` that are joined to v by an uncolored
// edge and carry a good `color` edge inside their own half. Returns them with
// their color partner.
std::vector<std::pair<VertexId, VertexId>> good_neighbors(const PartialColoring& c, const std::vector<char>& side_a,
                                                          const std::vector<std::size_t>& residual_degree,
                                                          VertexId v, Color color, std::size_t gamma) {
  const Multigraph& g = c.host();
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& inc : g.incident(v)) {
    const VertexId w = inc.neighbor;
    if (side_a[w] == side_a[v] || c.is_colored(inc.edge)) continue;
    const auto ce = c.edge_at(w, color);
    if (!ce) continue;
    const VertexId partner = g.endpoints(*ce).other(w);
    if (side_a[partner] != side_a[w]) continue;
    if (residual_degree[w] >= gamma || residual_degree[partner] >= gamma) continue;
    out.emplace_back(w, partner);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::size_t ceil_pow_five_sixths(std::size_t n) {
  std::size_t x = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 5.0 / 6.0)));
  if (x > 0) --x;
  const Wide target = pow_wide(n, 5);
  while (pow_wide(x, 6) < target) ++x;
  return x;
}

ResolvedConfig resolve_config(const PipelineConfig& config, std::size_t n) {
  ResolvedConfig out;
  out.n = n;
  out.r = config.r;
  if (out.r == 0) throw std::invalid_argument("config: r must be positive");
  out.gamma = config.good_degree_cap.value_or(ceil_pow_five_sixths(n));
  if (out.gamma == 0) throw std::invalid_argument("config: good-degree cap must be >= 1");
  out.j = config.residual_palette.value_or(out.gamma + out.r + 1);
  if (out.j == 0) throw std::invalid_argument("config: residual palette must be >= 1");
  out.split_bound = config.split_bound.value_or(default_split_bound(n));
  if (!(out.split_bound > 0.0)) throw std::invalid_argument("config: split bound must be positive");
  out.split_retries = config.split_retries;
  out.seed = config.seed;
  out.strict = config.enforce_paper_preconditions;
  return out;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kPreconditions: return "preconditions";
    case Stage::kSplit: return "split";
    case Stage::kStep1: return "step1";
    case Stage::kStep2: return "step2";
    case Stage::kStep3: return "step3";
    case Stage::kStep4: return "step4";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> PipelineStats::key_values() const {
  const auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  return {
      {"n", std::to_string(n)},
      {"r", std::to_string(r)},
      {"degree", std::to_string(degree)},
      {"gamma", std::to_string(gamma)},
      {"j", std::to_string(j)},
      {"k", std::to_string(k)},
      {"split_bound", fmt_double(split_bound)},
      {"split_bound_effective", fmt_double(split_bound_effective)},
      {"split_ok", b(split_ok)},
      {"split_retries", std::to_string(split_attempts)},
      {"split_max_deviation", std::to_string(split_max_deviation)},
      {"step1_max_missed", std::to_string(step1_max_missed)},
      {"step1_missed_limit", fmt_double(step1_missed_limit)},
      {"step1_bound_ok", b(step1_bound_ok)},
      {"exchanges", std::to_string(exchanges)},
      {"direct_exchanges", std::to_string(direct_exchanges)},
      {"residual_a_edges", std::to_string(residual_a_edges)},
      {"residual_max_degree", std::to_string(residual_max_degree)},
      {"cross_colored_max", std::to_string(cross_colored_max)},
      {"residual_size_bound_ok", b(residual_size_bound_ok)},
      {"residual_class_max", std::to_string(residual_class_max)},
      {"residual_class_bound_ok", b(residual_class_bound_ok)},
      {"final_residual_degree", std::to_string(final_residual_degree)},
      {"last_stage", last_stage},
  };
}

PartialColoring step1_base_colorings(const Multigraph& g, const Multigraph& gA, const Multigraph& gB,
                                     std::size_t r) {
  if (gA.num_edges() != gB.num_edges()) {
    throw std::invalid_argument("step1: halves have " + std::to_string(gA.num_edges()) + " and " +
                                std::to_string(gB.num_edges()) + " edges");
  }
  const std::size_t k = std::max(gA.max_degree(), gB.max_degree()) + r;
  const PartialColoring ca = equalize(vizing_color(gA, r), k);
  const PartialColoring cb = equalize(vizing_color(gB, r), k);
  PartialColoring out(g, k);
  merge_aligned(ca, cb, 0, out);
  return out;
}

PathSearch find_alternating_path(const PartialColoring& state, const std::vector<char>& side_a,
                                 const std::vector<std::size_t>& residual_degree, VertexId a, VertexId b,
                                 Color color, std::size_t gamma) {
  if (!side_a[a] || side_a[b]) throw std::invalid_argument("find_alternating_path: need a in A and b in B");
  if (!state.misses(a, color) || !state.misses(b, color)) {
    throw std::invalid_argument("find_alternating_path: endpoints must miss the color");
  }
  const Multigraph& g = state.host();
  PathSearch out;
  const auto n_b = good_neighbors(state, side_a, residual_degree, a, color, gamma);
  const auto n_a = good_neighbors(state, side_a, residual_degree, b, color, gamma);
  // M_A with the N_A vertex each member is matched to, ascending by M_A member.
  std::vector<std::pair<VertexId, VertexId>> m_a;
  for (auto [a1, a2] : n_a) m_a.emplace_back(a2, a1);
  std::sort(m_a.begin(), m_a.end());
  out.n_a = n_a.size();
  out.n_b = n_b.size();
  out.m_a = m_a.size();
  out.m_b = n_b.size();

  for (auto [b1, b2] : n_b) {
    for (auto [a2, a1] : m_a) {
      const auto mid = uncolored_between(state, b2, a2);
      if (!mid) continue;
      const EdgeId e1 = *uncolored_between(state, a, b1);
      const EdgeId e2 = *state.edge_at(b1, color);
      const EdgeId e4 = *state.edge_at(a2, color);
      const EdgeId e5 = *uncolored_between(state, a1, b);
      out.path.emplace(state, std::vector<VertexId>{a, b1, b2, a2, a1, b},
                       std::vector<EdgeId>{e1, e2, *mid, e4, e5}, color);
      (void)g;
      return out;
    }
  }
  if (const auto direct = uncolored_between(state, a, b)) {
    out.path.emplace(state, std::vector<VertexId>{a, b}, std::vector<EdgeId>{*direct}, color);
    out.direct = true;
  }
  return out;
}

Pipeline::Pipeline(const Multigraph& g, const Partition& split, ResolvedConfig config, double split_bound_effective)
    : g_(g),
      config_(config),
      side_(g.num_vertices(), 0),
      a_(split.a),
      b_(split.b),
      missed_after_step1_(g.num_vertices(), 0),
      residual_degree_(g.num_vertices(), 0),
      cross_colored_(g.num_vertices(), 0) {
  if (a_.size() != b_.size() || a_.size() + b_.size() != g.num_vertices()) {
    throw std::invalid_argument("pipeline: partition must split the vertices into equal halves");
  }
  for (VertexId v : a_) side_[v] = 1;
  g_a_ = g.induced(a_);
  g_b_ = g.induced(b_);
  stats_.n = config.n;
  stats_.r = config.r;
  stats_.degree = g.is_regular().value_or(0);
  stats_.gamma = config.gamma;
  stats_.j = config.j;
  stats_.split_bound = config.split_bound;
  stats_.split_bound_effective = split_bound_effective;
  stats_.step1_missed_limit = 2.0 * split_bound_effective + 3.0;
}

FailureReport Pipeline::failure(Stage stage, std::string detail) const {
  FailureReport report;
  report.stage = stage;
  report.detail = std::move(detail);
  report.gamma = config_.gamma;
  report.side_a = side_;
  if (coloring_) report.partial = snapshot(*coloring_);
  return report;
}

std::optional<FailureReport> Pipeline::step1() {
  stats_.last_stage = "step1";
  coloring_.emplace(step1_base_colorings(g_, g_a_, g_b_, config_.r));
  k_ = coloring_->palette_size();
  stats_.k = k_;
  for (VertexId v = 0; v < g_.num_vertices(); ++v) {
    missed_after_step1_[v] = k_ - coloring_->colored_degree(v);
  }
  for (Color c = 0; c < k_; ++c) {
    std::size_t missed_a = 0;
    std::size_t missed_b = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (coloring_->misses(v, c)) ++(side_[v] ? missed_a : missed_b);
    }
    if (missed_a != missed_b) throw std::logic_error("step1: color misses unequal counts on the two sides");
    stats_.step1_max_missed = std::max(stats_.step1_max_missed, missed_a);
  }
  stats_.step1_bound_ok = static_cast<double>(stats_.step1_max_missed) < stats_.step1_missed_limit;
  return std::nullopt;
}

void Pipeline::check_step2_invariants(std::initializer_list<VertexId> touched) const {
  if (residual_edges_a_ != residual_edges_b_) throw std::logic_error("step2: |E(R_A)| != |E(R_B)|");
  for (VertexId v : touched) {
    if (residual_degree_[v] >= config_.gamma + 1) {
      throw std::logic_error("step2: residual degree of vertex " + std::to_string(v) + " reached gamma + 1");
    }
    if (cross_colored_[v] > missed_after_step1_[v] + residual_degree_[v]) {
      throw std::logic_error("step2: colored cross edges at vertex " + std::to_string(v) +
                             " exceed missed colors plus residual degree");
    }
  }
}

std::optional<FailureReport> Pipeline::step2() {
  stats_.last_stage = "step2";
  PartialColoring& c = *coloring_;
  for (Color color = 0; color < k_; ++color) {
    std::vector<VertexId> miss_a;
    std::vector<VertexId> miss_b;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (c.misses(v, color)) (side_[v] ? miss_a : miss_b).push_back(v);
    }
    if (miss_a.size() != miss_b.size()) throw std::logic_error("step2: unequal missed counts");
    for (std::size_t i = 0; i < miss_a.size(); ++i) {
      const VertexId a = miss_a[i];
      const VertexId b = miss_b[i];
      const auto search = find_alternating_path(c, side_, residual_degree_, a, b, color, config_.gamma);
      if (!search.path) {
        auto report = failure(Stage::kStep2, "no alternating path for color " + std::to_string(color) +
                                                 " between " + std::to_string(a) + " and " + std::to_string(b) +
                                                 " (|N_A|=" + std::to_string(search.n_a) +
                                                 " |N_B|=" + std::to_string(search.n_b) +
                                                 " |M_A|=" + std::to_string(search.m_a) +
                                                 " |M_B|=" + std::to_string(search.m_b) + ")");
        report.color = color;
        report.witness = {a, b};
        record_step2_stats();
        return report;
      }
      const auto& vs = search.path->vertices();
      c.exchange(*search.path);
      ++stats_.exchanges;
      for (VertexId v : {vs.front(), vs.back()}) ++cross_colored_[v];
      if (search.direct) {
        ++stats_.direct_exchanges;
        check_step2_invariants({a, b});
      } else {
        // a b1 b2 a2 a1 b: b1b2 and a2a1 move into the residual graphs.
        for (std::size_t p = 1; p <= 4; ++p) {
          ++residual_degree_[vs[p]];
          ++cross_colored_[vs[p]];
        }
        ++residual_edges_a_;
        ++residual_edges_b_;
        check_step2_invariants({vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]});
      }
      if (c.misses(a, color) || c.misses(b, color)) throw std::logic_error("step2: exchange left an endpoint missed");
    }
    if (c.class_edges(color).size() != g_.num_vertices() / 2) {
      throw std::logic_error("step2: color class is not a 1-factor after completion");
    }
  }
  record_step2_stats();
  return std::nullopt;
}

void Pipeline::record_step2_stats() {
  stats_.residual_a_edges = residual_edges_a_;
  stats_.residual_max_degree = *std::max_element(residual_degree_.begin(), residual_degree_.end());
  stats_.cross_colored_max = *std::max_element(cross_colored_.begin(), cross_colored_.end());
  stats_.residual_size_bound_ok = below_two_n_five_thirds(residual_edges_a_, config_.n);
}

std::optional<FailureReport> Pipeline::step3() {
  stats_.last_stage = "step3";
  PartialColoring& c = *coloring_;
  const std::size_t j = config_.j;
  const auto uncolored_within = [&](char side) {
    return g_.filter([&](EdgeId e, const Edge& ends) {
      return side_[ends.u] == side && side_[ends.v] == side && !c.is_colored(e);
    });
  };
  const Multigraph r_a = uncolored_within(1);
  const Multigraph r_b = uncolored_within(0);
  if (r_a.num_edges() != r_b.num_edges()) throw std::logic_error("step3: residual halves differ in size");

  std::optional<FailureReport> too_small;
  const auto color_residual = [&](const Multigraph& r, const char* name) -> std::optional<PartialColoring> {
    PartialColoring vz = vizing_color(r, config_.r);
    if (vz.palette_size() > j) {
      // Compact the colors actually used; the palette bound is only an upper bound.
      const auto sizes = vz.class_sizes();
      std::vector<Color> remap(sizes.size(), 0);
      Color used = 0;
      for (Color col = 0; col < sizes.size(); ++col) {
        if (sizes[col]) remap[col] = used++;
      }
      if (used > j) {
        too_small = failure(Stage::kStep3, std::string("residual palette j=") + std::to_string(j) + " too small for " +
                                               name + ": coloring needs " + std::to_string(used) + " colors");
        return std::nullopt;
      }
      PartialColoring compact(r, used);
      for (EdgeId e : r.edge_ids()) compact.assign(e, remap[*vz.color_of(e)]);
      vz = std::move(compact);
    }
    return equalize(std::move(vz), j);
  };
  const auto ca = color_residual(r_a, "R_A");
  if (!ca) return too_small;
  const auto cb = color_residual(r_b, "R_B");
  if (!cb) return too_small;

  c.extend_palette(k_ + j);
  merge_aligned(*ca, *cb, static_cast<Color>(k_), c);
  for (std::size_t size : ca->class_sizes()) {
    stats_.residual_class_max = std::max(stats_.residual_class_max, size);
    // size < 2 n^{5/3} / j + 1
    if (size > 0 && !below_two_n_five_thirds(static_cast<Wide>(size - 1) * j, config_.n)) {
      stats_.residual_class_bound_ok = false;
    }
  }

  for (Color color = static_cast<Color>(k_); color < k_ + j; ++color) {
    std::vector<char> busy(g_.num_vertices(), 0);
    std::vector<VertexId> x;
    std::vector<VertexId> y;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      busy[v] = c.misses(v, color) ? 0 : 1;
      if (!busy[v]) (side_[v] ? x : y).push_back(v);
    }
    if (x.size() != y.size()) throw std::logic_error("step3: |A_i| != |B_i|");
    const Multigraph ci = g_.filter([&](EdgeId e, const Edge& ends) {
      return side_[ends.u] != side_[ends.v] && !busy[ends.u] && !busy[ends.v] && !c.is_colored(e);
    });
    const VertexSet xs(std::move(x));
    const VertexSet ys(std::move(y));
    const MatchingWitness w = hall_matching(ci, xs, ys);
    if (!w.covers_x) {
      auto report = failure(Stage::kStep3, "no perfect matching in residual cross graph for color " +
                                               std::to_string(color) + ": |S|=" +
                                               std::to_string(w.deficiency.size()) +
                                               " |N(S)|=" + std::to_string(w.neighbors.size()));
      report.color = color;
      report.witness.assign(w.deficiency.begin(), w.deficiency.end());
      report.neighbors.assign(w.neighbors.begin(), w.neighbors.end());
      return report;
    }
    for (EdgeId e : w.matching) c.assign(e, color);
  }
  return std::nullopt;
}

std::variant<Factorization, FailureReport> Pipeline::step4() {
  stats_.last_stage = "step4";
  PartialColoring& c = *coloring_;
  const Multigraph rest = g_.filter([&](EdgeId e, const Edge&) { return !c.is_colored(e); });
  for (EdgeId e : rest.edge_ids()) {
    const Edge& ends = rest.endpoints(e);
    if (side_[ends.u] == side_[ends.v]) throw std::logic_error("step4: uncolored edge inside a half");
  }
  const std::size_t d = stats_.degree;
  const std::size_t used = k_ + config_.j;
  const auto reg = rest.is_regular();
  if (used > d || !reg || *reg != d - used) {
    throw std::logic_error("step4: residual cross graph is not regular of degree d - k - j");
  }
  stats_.final_residual_degree = *reg;
  c.extend_palette(d);
  if (*reg > 0) {
    const PartialColoring kc = konig_color(rest, a_, b_);
    for (EdgeId e : rest.edge_ids()) c.assign(e, *kc.color_of(e) + static_cast<Color>(used));
  }
  Factorization f;
  for (Color color = 0; color < d; ++color) f.factors.push_back(c.class_edges(color));
  stats_.last_stage = "done";
  return f;
}

FactorizeResult factorize(const Multigraph& g, const PipelineConfig& config) {
  const std::size_t order = g.num_vertices();
  if (order == 0 || order % 2) throw std::invalid_argument("factorize: order must be even and positive");
  const auto degree = g.is_regular();
  if (!degree) throw std::invalid_argument("factorize: graph is not regular");
  if (g.multiplicity() > config.r) {
    throw std::invalid_argument("factorize: multiplicity " + std::to_string(g.multiplicity()) + " exceeds r = " +
                                std::to_string(config.r));
  }
  const std::size_t n = order / 2;
  const ResolvedConfig cfg = resolve_config(config, n);
  const std::size_t d = *degree;
  const std::size_t r = cfg.r;

  FactorizeResult result;
  PipelineStats& stats = result.stats;
  stats.n = n;
  stats.r = r;
  stats.degree = d;
  stats.gamma = cfg.gamma;
  stats.j = cfg.j;
  stats.split_bound = cfg.split_bound;
  stats.last_stage = "preconditions";

  const auto refuse = [&](Stage stage, std::string detail) {
    FailureReport report;
    report.stage = stage;
    report.detail = std::move(detail);
    report.gamma = cfg.gamma;
    result.outcome = std::move(report);
    return result;
  };

  const double nd = static_cast<double>(n);
  const double n56 = std::pow(nd, 5.0 / 6.0);
  if (cfg.strict) {
    if (pow_wide(n, 5) <= pow_wide(3 * r, 6)) {
      return refuse(Stage::kPreconditions, "violated: n^(5/6) > 3r (n=" + std::to_string(n) + ", n^(5/6)=" +
                                               fmt_double(n56) + ", 3r=" + std::to_string(3 * r) + ")");
    }
    const double threshold = static_cast<double>(r) * nd + 29.0 * static_cast<double>(r) * n56;
    if (!(static_cast<double>(d) > threshold)) {
      return refuse(Stage::kPreconditions, "violated: d(G) > rn + 29 r n^(5/6) (d=" + std::to_string(d) +
                                               ", rn + 29 r n^(5/6)=" + fmt_double(threshold) + ")");
    }
  }

  stats.last_stage = "split";
  const SplitOutcome split = balanced_split(g, cfg.split_bound, cfg.split_retries, cfg.seed);
  stats.split_ok = split.ok;
  stats.split_attempts = split.attempts;
  stats.split_max_deviation = split.partition.max_deviation();
  double effective = cfg.split_bound;
  if (!split.ok) {
    if (cfg.strict) {
      auto r2 = refuse(Stage::kSplit, "no split below bound " + fmt_double(cfg.split_bound) + " in " +
                                          std::to_string(split.attempts) + " attempts; best max deviation " +
                                          std::to_string(stats.split_max_deviation));
      std::get<FailureReport>(r2.outcome).side_a.assign(order, 0);
      for (VertexId v : split.partition.a) std::get<FailureReport>(r2.outcome).side_a[v] = 1;
      return r2;
    }
    // Best effort: continue on the best split seen, with a bound it does satisfy.
    effective = static_cast<double>(stats.split_max_deviation) + 1.0;
  }
  stats.split_bound_effective = effective;

  if (cfg.strict) {
    const double need = static_cast<double>(r) * nd / 2.0 + 14.0 * static_cast<double>(r * cfg.gamma);
    for (VertexId v = 0; v < order; ++v) {
      const auto da = static_cast<double>(g.degree_into(v, split.partition.a));
      const auto db = static_cast<double>(g.degree_into(v, split.partition.b));
      if (!(da > need) || !(db > need)) {
        return refuse(Stage::kPreconditions, "violated: d_A(v), d_B(v) > rn/2 + 14 r gamma at v=" +
                                                 std::to_string(v) + " (d_A=" + fmt_double(da) + ", d_B=" +
                                                 fmt_double(db) + ", need > " + fmt_double(need) + ")");
      }
    }
    const Multigraph ga = g.induced(split.partition.a);
    const Multigraph gb = g.induced(split.partition.b);
    std::size_t hi = 0;
    std::size_t lo = SIZE_MAX;
    for (VertexId v : split.partition.a) {
      hi = std::max(hi, ga.degree(v));
      lo = std::min(lo, ga.degree(v));
    }
    for (VertexId v : split.partition.b) {
      hi = std::max(hi, gb.degree(v));
      lo = std::min(lo, gb.degree(v));
    }
    if (!(static_cast<double>(hi - lo) < default_split_bound(n))) {
      return refuse(Stage::kPreconditions, "violated: max Delta - min delta of the halves < n^(2/3) (got " +
                                               std::to_string(hi - lo) + ")");
    }
  }

  Pipeline pipeline(g, split.partition, cfg, effective);
  pipeline.stats().split_ok = stats.split_ok;
  pipeline.stats().split_attempts = stats.split_attempts;
  pipeline.stats().split_max_deviation = stats.split_max_deviation;
  const auto finish_failure = [&](FailureReport report) {
    result.stats = pipeline.stats();
    result.outcome = std::move(report);
    return result;
  };
  if (auto f = pipeline.step1()) return finish_failure(std::move(*f));
  if (auto f = pipeline.step2()) return finish_failure(std::move(*f));
  if (auto f = pipeline.step3()) return finish_failure(std::move(*f));
  auto last = pipeline.step4();
  result.stats = pipeline.stats();
  if (auto* report = std::get_if<FailureReport>(&last)) {
    result.outcome = std::move(*report);
    return result;
  }
  Factorization f = std::move(std::get<Factorization>(last));
  const VerificationReport check = verify_factorization(g, f);
  if (!check.ok) {
    throw std::logic_error("factorize: produced factorization failed verification: " +
                           check.violations.front().describe());
  }
  result.outcome = std::move(f);
  return result;
}

bool failure_witness_holds(const Multigraph& g, const FailureReport& report) {
  if (report.stage != Stage::kStep2 && report.stage != Stage::kStep3) return true;
  if (!report.color || report.side_a.size() != g.num_vertices() || report.partial.size() < g.edge_id_bound()) {
    return false;
  }
  std::size_t palette = *report.color + 1;
  for (EdgeId e : g.edge_ids()) {
    if (report.partial[e]) palette = std::max<std::size_t>(palette, *report.partial[e] + 1);
  }
  PartialColoring c(g, palette);
  try {
    for (EdgeId e : g.edge_ids()) {
      if (report.partial[e]) c.assign(e, *report.partial[e]);
    }
  } catch (const ColoringConflict&) {
    return false;
  }
  const Color color = *report.color;
  const auto& side = report.side_a;

  if (report.stage == Stage::kStep2) {
    if (report.witness.size() != 2) return false;
    const VertexId a = report.witness[0];
    const VertexId b = report.witness[1];
    if (!side[a] || side[b] || !c.misses(a, color) || !c.misses(b, color)) return false;
    std::vector<std::size_t> residual(g.num_vertices(), 0);
    for (EdgeId e : g.edge_ids()) {
      const Edge& ends = g.endpoints(e);
      if (side[ends.u] == side[ends.v] && !c.is_colored(e)) {
        ++residual[ends.u];
        ++residual[ends.v];
      }
    }
    return !find_alternating_path(c, side, residual, a, b, color, report.gamma).path;
  }

  // Step 3: S lies among the free A-vertices and its neighborhood in the
  // uncolored cross edges between free vertices is exactly `neighbors`.
  std::vector<char> in_s(g.num_vertices(), 0);
  for (VertexId v : report.witness) {
    if (!side[v] || !c.misses(v, color)) return false;
    in_s[v] = 1;
  }
  std::vector<VertexId> nbrs;
  for (VertexId v : report.witness) {
    for (const auto& inc : g.incident(v)) {
      const VertexId w = inc.neighbor;
      if (side[w] || !c.misses(w, color) || c.is_colored(inc.edge)) continue;
      nbrs.push_back(w);
    }
  }
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  return nbrs == report.neighbors && nbrs.size() < report.witness.size();
}

}  // namespace onefact
