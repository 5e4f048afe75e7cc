#include <gtest/gtest.h>

#include "onefact/coloring.hpp"
#include "test_support.hpp"

namespace onefact {
namespace {

TEST(PartialColoring, AssignTracksMissingColors) {
  const Multigraph g = testing::complete_graph(3);
  PartialColoring c(g, 3);
  c.assign(0, 1);
  EXPECT_EQ(c.color_of(0), 1u);
  EXPECT_FALSE(c.misses(g.endpoints(0).u, 1));
  EXPECT_EQ(c.missing_colors(g.endpoints(0).u), (std::vector<Color>{0, 2}));
  EXPECT_EQ(c.colored_degree(g.endpoints(0).v), 1u);
  EXPECT_EQ(c.class_sizes(), (std::vector<std::size_t>{0, 1, 0}));
  c.unassign(0);
  EXPECT_FALSE(c.is_colored(0));
  EXPECT_EQ(c.num_colored(), 0u);
}

TEST(PartialColoring, ConflictNamesTheClash) {
  const Multigraph g = testing::complete_graph(3);
  PartialColoring c(g, 3);
  c.assign(0, 2);
  try {
    c.assign(1, 2);
    FAIL() << "conflict not raised";
  } catch (const ColoringConflict& e) {
    EXPECT_EQ(e.edge, 1u);
    EXPECT_EQ(e.conflict, 0u);
    EXPECT_EQ(e.color, 2u);
  }
  EXPECT_THROW(c.assign(2, 3), std::out_of_range);
  EXPECT_THROW(c.assign(0, 1), std::invalid_argument);
  EXPECT_NO_THROW(c.audit());
}

TEST(PartialColoring, ExtendPaletteKeepsAssignments) {
  const Multigraph g = testing::complete_graph(4);
  PartialColoring c(g, 1);
  c.assign(0, 0);
  c.extend_palette(5);
  EXPECT_EQ(c.palette_size(), 5u);
  EXPECT_EQ(c.color_of(0), 0u);
  c.assign(5, 4);
  EXPECT_THROW(c.extend_palette(2), std::invalid_argument);
  EXPECT_NO_THROW(c.audit());
}

// Path 0-1-2-3-4-5 on a six-cycle-free graph: uncolored 0-1, 2-3, 4-5 and
// color-0 edges 1-2, 3-4.
struct FivePath {
  Multigraph g{6};
  std::vector<EdgeId> e;
  FivePath() {
    for (VertexId v = 0; v < 5; ++v) e.push_back(g.add_edges(v, v + 1));
  }
};

TEST(AlternatingPath, ExchangeFlipsRoles) {
  FivePath p;
  PartialColoring c(p.g, 1);
  c.assign(p.e[1], 0);
  c.assign(p.e[3], 0);
  const AlternatingPath path(c, {0, 1, 2, 3, 4, 5}, p.e, 0);
  c.exchange(path);
  EXPECT_EQ(c.class_edges(0), (std::vector<EdgeId>{p.e[0], p.e[2], p.e[4]}));
  for (VertexId v = 0; v < 6; ++v) EXPECT_FALSE(c.misses(v, 0));
  EXPECT_TRUE(testing::proper_from_scratch(c));
}

TEST(AlternatingPath, RejectsBrokenShapes) {
  FivePath p;
  PartialColoring c(p.g, 2);
  c.assign(p.e[1], 0);
  // Second colored edge missing.
  EXPECT_THROW(AlternatingPath(c, {0, 1, 2, 3, 4, 5}, p.e, 0), std::invalid_argument);
  c.assign(p.e[3], 1);
  EXPECT_THROW(AlternatingPath(c, {0, 1, 2, 3, 4, 5}, p.e, 0), std::invalid_argument);
  // Wrong length.
  EXPECT_THROW(AlternatingPath(c, {0, 1, 2}, {p.e[0], p.e[1]}, 0), std::invalid_argument);
  // Repeated vertex.
  EXPECT_THROW(AlternatingPath(c, {0, 1, 2, 3, 4, 0}, p.e, 0), std::invalid_argument);
}

TEST(AlternatingPath, SingleEdgeNeedsBothEndsMissing) {
  Multigraph g(3);
  const EdgeId a = g.add_edges(0, 1);
  const EdgeId b = g.add_edges(1, 2);
  PartialColoring c(g, 1);
  EXPECT_NO_THROW(AlternatingPath(c, {0, 1}, {a}, 0));
  c.assign(b, 0);
  EXPECT_THROW(AlternatingPath(c, {0, 1}, {a}, 0), std::invalid_argument);
}

TEST(AlternatingPath, StaleValidationFailsAtExchange) {
  FivePath p;
  PartialColoring c(p.g, 2);
  c.assign(p.e[1], 0);
  c.assign(p.e[3], 0);
  const AlternatingPath path(c, {0, 1, 2, 3, 4, 5}, p.e, 0);
  c.unassign(p.e[3]);
  EXPECT_THROW(c.exchange(path), std::invalid_argument);
  EXPECT_TRUE(c.is_colored(p.e[1]));
}

}  // namespace
}  // namespace onefact
