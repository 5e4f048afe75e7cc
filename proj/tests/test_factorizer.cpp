#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "onefact/factorizer.hpp"
#include "onefact/instances.hpp"
#include "onefact/palette_algorithms.hpp"
#include "test_support.hpp"

namespace onefact {
namespace {

using Wide = unsigned __int128;

Wide pow6(Wide x) { return x * x * x * x * x * x; }

Multigraph corpus_graph(std::size_t n2, std::size_t d, std::size_t r, Seed seed) {
  return edge_swap_shuffle(regular_from_factors(n2, d, r, seed), r, 20 * n2 * d, seed);
}

TEST(Config, CeilFiveSixths) {
  EXPECT_EQ(ceil_pow_five_sixths(1), 1u);
  EXPECT_EQ(ceil_pow_five_sixths(64), 32u);
  EXPECT_EQ(ceil_pow_five_sixths(729), 243u);
  for (std::size_t n = 1; n < 5000; n += 7) {
    const std::size_t x = ceil_pow_five_sixths(n);
    const Wide n5 = Wide(n) * n * n * n * n;
    EXPECT_GE(pow6(x), n5);
    EXPECT_LT(pow6(x - 1), n5);
    EXPECT_NEAR(static_cast<double>(x), std::ceil(std::pow(static_cast<double>(n), 5.0 / 6.0)), 1.0);
  }
}

TEST(Config, Defaults) {
  PipelineConfig c;
  c.r = 2;
  const ResolvedConfig rc = resolve_config(c, 100);
  EXPECT_EQ(rc.gamma, 47u);  // 100^{5/6} = 46.4
  EXPECT_EQ(rc.j, 47u + 2 + 1);
  EXPECT_NEAR(rc.split_bound, std::pow(100.0, 2.0 / 3.0), 1e-9);
  EXPECT_FALSE(rc.strict);
}

TEST(Config, RejectsZeroKnobs) {
  PipelineConfig c;
  c.good_degree_cap = 0;
  EXPECT_THROW(resolve_config(c, 10), std::invalid_argument);
  c.good_degree_cap.reset();
  c.residual_palette = 0;
  EXPECT_THROW(resolve_config(c, 10), std::invalid_argument);
  c.residual_palette.reset();
  c.split_bound = -1.0;
  EXPECT_THROW(resolve_config(c, 10), std::invalid_argument);
}

TEST(Step1, AlignedEqualizedHalves) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n2 = 2 * (3 + rng() % 25);
    const std::size_t r = 1 + rng() % 3;
    const Multigraph g = corpus_graph(n2, 1 + rng() % (r * (n2 - 1)), r, rng());
    const Partition p = random_split(g, rng());
    const Multigraph ga = g.induced(p.a);
    const Multigraph gb = g.induced(p.b);
    const PartialColoring c = step1_base_colorings(g, ga, gb, r);
    const std::size_t k = std::max(ga.max_degree(), gb.max_degree()) + r;
    ASSERT_EQ(c.palette_size(), k);
    ASSERT_TRUE(testing::proper_from_scratch(c));
    std::vector<std::size_t> in_a(k, 0);
    std::vector<std::size_t> in_b(k, 0);
    for (EdgeId e : g.edge_ids()) {
      const bool ua = p.in_a(g.endpoints(e).u);
      const bool va = p.in_a(g.endpoints(e).v);
      if (ua != va) {
        EXPECT_FALSE(c.is_colored(e));
        continue;
      }
      ASSERT_TRUE(c.is_colored(e));
      ++(ua ? in_a : in_b)[*c.color_of(e)];
    }
    EXPECT_EQ(in_a, in_b);
  }
}

TEST(Step1, RejectsUnequalHalves) {
  Multigraph g(4);
  g.add_edges(0, 1);
  const Multigraph ga = g.induced(VertexSet{0, 1});
  const Multigraph gb = g.induced(VertexSet{2, 3});
  EXPECT_THROW(step1_base_colorings(g, ga, gb, 1), std::invalid_argument);
}

// A = {0, 1, 2}, B = {3, 4, 5}; color 0 on 1-2 and 4-5; all cross edges
// present and uncolored.
struct MicroInstance {
  Multigraph g{6};
  std::vector<char> side{1, 1, 1, 0, 0, 0};
  EdgeId in_a;
  EdgeId in_b;
  MicroInstance() {
    in_a = g.add_edges(1, 2);
    in_b = g.add_edges(4, 5);
    for (VertexId a = 0; a < 3; ++a) {
      for (VertexId b = 3; b < 6; ++b) g.add_edges(a, b);
    }
  }
};

TEST(PathSearch, FollowsSearchOrder) {
  MicroInstance m;
  PartialColoring c(m.g, 1);
  c.assign(m.in_a, 0);
  c.assign(m.in_b, 0);
  const std::vector<std::size_t> residual(6, 0);
  const PathSearch s = find_alternating_path(c, m.side, residual, 0, 3, 0, 1);
  ASSERT_TRUE(s.path);
  EXPECT_FALSE(s.direct);
  EXPECT_EQ(s.path->vertices(), (std::vector<VertexId>{0, 4, 5, 1, 2, 3}));
  EXPECT_EQ(s.path->edges().size(), 5u);
  PartialColoring after = c;
  after.exchange(*s.path);
  EXPECT_FALSE(after.misses(0, 0));
  EXPECT_FALSE(after.misses(3, 0));
  EXPECT_FALSE(after.is_colored(m.in_a));
  EXPECT_FALSE(after.is_colored(m.in_b));
}

TEST(PathSearch, BadEdgesFallBackToDirect) {
  MicroInstance m;
  PartialColoring c(m.g, 1);
  c.assign(m.in_a, 0);
  c.assign(m.in_b, 0);
  std::vector<std::size_t> residual(6, 0);
  residual[4] = 2;  // 4-5 is no longer good with gamma 2
  const PathSearch s = find_alternating_path(c, m.side, residual, 0, 3, 0, 2);
  ASSERT_TRUE(s.path);
  EXPECT_TRUE(s.direct);
  EXPECT_EQ(s.path->vertices(), (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(s.n_b, 0u);
}

TEST(PathSearch, RejectsWrongEndpoints) {
  MicroInstance m;
  PartialColoring c(m.g, 1);
  c.assign(m.in_a, 0);
  const std::vector<std::size_t> residual(6, 0);
  EXPECT_THROW(find_alternating_path(c, m.side, residual, 3, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(find_alternating_path(c, m.side, residual, 1, 3, 0, 1), std::invalid_argument);
}

// Brute force over all vertex 6-tuples of the required shape.
bool five_path_exists(const PartialColoring& c, const std::vector<char>& side,
                      const std::vector<std::size_t>& residual, VertexId a, VertexId b, Color color,
                      std::size_t gamma) {
  const Multigraph& g = c.host();
  const auto uncolored = [&](VertexId u, VertexId v) {
    for (EdgeId e : g.edges_between(u, v)) {
      if (!c.is_colored(e)) return true;
    }
    return false;
  };
  const auto good = [&](VertexId u, VertexId v) {
    const auto e = c.edge_at(u, color);
    return e && g.endpoints(*e).other(u) == v && side[u] == side[v] && residual[u] < gamma && residual[v] < gamma;
  };
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId b1 = 0; b1 < n; ++b1) {
    for (VertexId b2 = 0; b2 < n; ++b2) {
      for (VertexId a2 = 0; a2 < n; ++a2) {
        for (VertexId a1 = 0; a1 < n; ++a1) {
          if (side[b1] || side[b2] || !side[a1] || !side[a2]) continue;
          if (uncolored(a, b1) && good(b1, b2) && uncolored(b2, a2) && good(a2, a1) && uncolored(a1, b)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

TEST(PathSearchProperty, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(4);
  std::size_t found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n2 = 2 * (3 + rng() % 5);
    const std::size_t r = 1 + rng() % 2;
    const Multigraph g = corpus_graph(n2, 1 + rng() % (r * (n2 - 1)), r, rng());
    const Partition p = random_split(g, rng());
    const Multigraph ga = g.induced(p.a);
    const Multigraph gb = g.induced(p.b);
    const PartialColoring c = step1_base_colorings(g, ga, gb, r);
    std::vector<char> side(n2, 0);
    for (VertexId v : p.a) side[v] = 1;
    std::vector<std::size_t> residual(n2);
    for (auto& x : residual) x = rng() % 3;
    const std::size_t gamma = 1 + rng() % 3;
    for (Color color = 0; color < c.palette_size(); ++color) {
      for (VertexId a : p.a) {
        for (VertexId b : p.b) {
          if (!c.misses(a, color) || !c.misses(b, color)) continue;
          const PathSearch s = find_alternating_path(c, side, residual, a, b, color, gamma);
          const bool five = s.path && !s.direct;
          ASSERT_EQ(five, five_path_exists(c, side, residual, a, b, color, gamma));
          found += five;
        }
      }
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(Pipeline, StagesOnSuccessfulInstance) {
  const Multigraph g = corpus_graph(100, 99, 1, 7);
  PipelineConfig config;
  const ResolvedConfig rc = resolve_config(config, 50);
  const SplitOutcome split = balanced_split(g, rc.split_bound, rc.split_retries, rc.seed);
  ASSERT_TRUE(split.ok);
  Pipeline p(g, split.partition, rc, rc.split_bound);
  ASSERT_FALSE(p.step1());
  std::size_t missed = 0;
  for (Color c = 0; c < p.coloring().palette_size(); ++c) {
    for (VertexId v : split.partition.a) missed += p.coloring().misses(v, c);
  }
  EXPECT_TRUE(p.stats().step1_bound_ok);
  ASSERT_FALSE(p.step2());
  // Each exchange removes exactly one missed A-vertex and one missed B-vertex.
  EXPECT_EQ(p.stats().exchanges, missed);
  for (Color c = 0; c < p.coloring().palette_size(); ++c) EXPECT_EQ(p.coloring().class_edges(c).size(), 50u);
  EXPECT_LE(p.stats().residual_max_degree, rc.gamma);
  ASSERT_FALSE(p.step3());
  for (EdgeId e : g.edge_ids()) {
    if (p.side_a()[g.endpoints(e).u] == p.side_a()[g.endpoints(e).v]) {
      EXPECT_TRUE(p.coloring().is_colored(e));
    }
  }
  for (Color c = 0; c < p.coloring().palette_size(); ++c) EXPECT_EQ(p.coloring().class_edges(c).size(), 50u);
  auto out = p.step4();
  ASSERT_TRUE(std::holds_alternative<Factorization>(out));
  EXPECT_EQ(std::get<Factorization>(out).factors.size(), 99u);
  EXPECT_EQ(p.stats().final_residual_degree, 99 - p.stats().k - rc.j);
  EXPECT_TRUE(verify_factorization(g, std::get<Factorization>(out)).ok);
}

TEST(Factorize, K4WithUnitResidualPalette) {
  const Multigraph g = testing::complete_graph(4);
  PipelineConfig config;
  config.residual_palette = 1;
  const FactorizeResult res = factorize(g, config);
  ASSERT_TRUE(res.ok()) << res.failure().detail;
  EXPECT_EQ(res.factorization().factors.size(), 3u);
  EXPECT_TRUE(verify_factorization(g, res.factorization()).ok);
  EXPECT_TRUE(brute_force_factorize(g).has_value());
}

TEST(Factorize, K4DefaultPaletteFailsWithWitness) {
  const Multigraph g = testing::complete_graph(4);
  const FactorizeResult res = factorize(g, PipelineConfig{});
  ASSERT_FALSE(res.ok());
  EXPECT_EQ(res.failure().stage, Stage::kStep3);
  EXPECT_TRUE(failure_witness_holds(g, res.failure()));
}

TEST(Factorize, ExtremalNeverSucceeds) {
  for (std::size_t n : {3u, 5u, 7u}) {
    PipelineConfig config;
    config.r = 2;
    for (Seed s = 0; s < 5; ++s) {
      config.seed = s;
      const Multigraph g = extremal_graph(n, 2);
      const FactorizeResult res = factorize(g, config);
      ASSERT_FALSE(res.ok());
      EXPECT_TRUE(failure_witness_holds(g, res.failure()));
    }
  }
}

TEST(Factorize, TamperedWitnessIsRejected) {
  const Multigraph g = extremal_graph(5, 2);
  PipelineConfig config;
  config.r = 2;
  FactorizeResult res = factorize(g, config);
  ASSERT_FALSE(res.ok());
  FailureReport report = res.failure();
  ASSERT_TRUE(report.stage == Stage::kStep2 || report.stage == Stage::kStep3);
  ASSERT_TRUE(failure_witness_holds(g, report));
  if (report.stage == Stage::kStep2) {
    std::swap(report.witness[0], report.witness[1]);
  } else {
    report.neighbors.push_back(static_cast<VertexId>(g.num_vertices() - 1));
  }
  EXPECT_FALSE(failure_witness_holds(g, report));
}

// Found by scanning generator and split seeds; order 8 leaves almost no room
// for k + j <= d.
TEST(Factorize, RoundRobinK8DoubledSucceedsWithTunedConfig) {
  const Multigraph g = regular_from_factors(8, 8, 2, 28);
  PipelineConfig config;
  config.r = 2;
  config.good_degree_cap = 8;
  config.residual_palette = 2;
  config.seed = 2;
  const FactorizeResult res = factorize(g, config);
  ASSERT_TRUE(res.ok()) << res.failure().detail;
  EXPECT_EQ(res.factorization().factors.size(), 8u);
  EXPECT_TRUE(verify_factorization(g, res.factorization()).ok);
}

TEST(Factorize, RejectsInvalidInput) {
  Multigraph irregular(4);
  irregular.add_edges(0, 1);
  EXPECT_THROW(factorize(irregular, {}), std::invalid_argument);
  EXPECT_THROW(factorize(testing::complete_graph(3), {}), std::invalid_argument);
  PipelineConfig config;
  config.r = 1;
  EXPECT_THROW(factorize(testing::complete_graph(4, 2), config), std::invalid_argument);
}

TEST(Factorize, StrictRefusesSmallN) {
  PipelineConfig config;
  config.r = 2;
  config.enforce_paper_preconditions = true;
  const FactorizeResult res = factorize(regular_from_factors(8, 8, 2, 1), config);
  ASSERT_FALSE(res.ok());
  EXPECT_EQ(res.failure().stage, Stage::kPreconditions);
  EXPECT_NE(res.failure().detail.find("n^(5/6) > 3r"), std::string::npos);
}

TEST(Factorize, StrictRefusesLowDegree) {
  PipelineConfig config;
  config.r = 1;
  config.enforce_paper_preconditions = true;
  const FactorizeResult res = factorize(corpus_graph(200, 150, 1, 1), config);
  ASSERT_FALSE(res.ok());
  EXPECT_EQ(res.failure().stage, Stage::kPreconditions);
  EXPECT_NE(res.failure().detail.find("29 r n^(5/6)"), std::string::npos);
}

TEST(Factorize, RelaxedSplitUsesAchievedBound) {
  const Multigraph g = corpus_graph(60, 59, 1, 3);
  PipelineConfig config;
  config.split_bound = 0.5;  // unattainable: every degree is odd
  config.split_retries = 3;
  const FactorizeResult res = factorize(g, config);
  EXPECT_FALSE(res.stats.split_ok);
  EXPECT_EQ(res.stats.split_attempts, 3u);
  EXPECT_DOUBLE_EQ(res.stats.split_bound_effective, static_cast<double>(res.stats.split_max_deviation) + 1.0);

  config.enforce_paper_preconditions = true;
  const FactorizeResult strict = factorize(g, config);
  ASSERT_FALSE(strict.ok());
  EXPECT_TRUE(strict.failure().stage == Stage::kPreconditions || strict.failure().stage == Stage::kSplit);
}

TEST(FactorizeProperty, SoundOrExplicitAcrossSeeds) {
  std::mt19937_64 rng(99);
  std::size_t successes = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n2 = 2 * (20 + rng() % 40);
    const std::size_t r = 1 + rng() % 2;
    const std::size_t lo = (11 * r * n2 + 19) / 20;
    const std::size_t d = lo + rng() % (r * (n2 - 1) - lo + 1);
    const Multigraph g = corpus_graph(n2, d, r, rng());
    PipelineConfig config;
    config.r = r;
    config.seed = rng();
    const FactorizeResult res = factorize(g, config);
    if (res.ok()) {
      ++successes;
      EXPECT_TRUE(verify_factorization_serial(g, res.factorization()).ok);
      EXPECT_TRUE(res.stats.step1_bound_ok);
    } else {
      EXPECT_TRUE(failure_witness_holds(g, res.failure()));
    }
  }
  EXPECT_GT(successes, 0u);
}

TEST(Factorize, DeterministicForSeed) {
  const Multigraph g = corpus_graph(80, 90, 2, 5);
  PipelineConfig config;
  config.r = 2;
  config.seed = 17;
  const FactorizeResult a = factorize(g, config);
  const FactorizeResult b = factorize(g, config);
  ASSERT_EQ(a.ok(), b.ok());
  if (a.ok()) {
    EXPECT_EQ(a.factorization().factors, b.factorization().factors);
  }
  EXPECT_EQ(a.stats.key_values(), b.stats.key_values());
}

}  // namespace
}  // namespace onefact
