#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;

TEST(Gdn, ThreeTrianglesOnSevenVertices) {
  const auto c = build_gdn(7, 3);
  EXPECT_EQ(c.graph.order(), 7);
  EXPECT_EQ(c.graph.size(), 9);
  EXPECT_EQ(c.plan.q, 3);
  EXPECT_EQ(c.plan.pendant_count, 0);
  EXPECT_EQ(max_degree(c.graph), 6);
  EXPECT_EQ(c.graph.degree(c.plan.hub), 6);
  EXPECT_TRUE(is_rainbow_connected(c.graph, c.coloring));
}

TEST(Gdn, FourSquaresOnThirteenVertices) {
  const auto c = build_gdn(13, 4);
  EXPECT_EQ(c.graph.order(), 13);
  EXPECT_EQ(c.graph.size(), 16);
  EXPECT_EQ(c.plan.q, 4);
  EXPECT_EQ(c.plan.pendant_count, 0);
}

TEST(Gdn, PendantLeafWhenRemainderIsTwo) {
  const auto c = build_gdn(8, 3);
  EXPECT_EQ(c.graph.order(), 8);
  EXPECT_EQ(c.graph.size(), 10);
  EXPECT_EQ(c.plan.pendant_count, 1);
  EXPECT_EQ(c.plan.pendant_colors, std::vector<Color>{2});
  EXPECT_FALSE(c.plan.used_fallback);
  EXPECT_TRUE(oracle::rainbow_connected(c.graph, c.coloring));
}

TEST(Gdn, RejectsOutOfRange) {
  EXPECT_THROW(build_gdn(8, 5), InputError);
  EXPECT_THROW(build_gdn(8, 4), InputError);  // ceil(8/2) = 4
  EXPECT_THROW(build_gdn(9, 2), InputError);
}

TEST(Gdn, CertifiedOverTheWholeGrid) {
  for (int d = 3; d <= 6; ++d) {
    for (int n = 2 * d; n <= 14; ++n) {
      if (d >= (n + 1) / 2) continue;
      const auto c = build_gdn(n, d);
      const Graph& g = c.graph;
      SCOPED_TRACE("n=" + std::to_string(n) + " d=" + std::to_string(d));
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(g.size(), eval_prop3_upper(n, d));
      EXPECT_EQ(1 + c.plan.q * (d - 1) + c.plan.pendant_count, n);
      EXPECT_LE(c.plan.pendant_count, d - 2);
      EXPECT_EQ(g.degree(c.plan.hub), 2 * c.plan.q + c.plan.pendant_count);
      EXPECT_LE(diameter(g), d);
      EXPECT_LE(c.coloring.k, d);
      const auto r = is_rainbow_connected(g, c.coloring);
      ASSERT_TRUE(r);
      EXPECT_TRUE(check_certificate(g, c.coloring, r.certificate));
    }
  }
}

TEST(Gdn, SolverRcAtMostD) {
  // The construction only promises rc <= d; record the exact value too.
  for (auto [n, d] : {std::pair{7, 3}, std::pair{8, 3}}) {
    const Graph g = build_gdn(n, d).graph;
    const int rc = rc_exact(g, d).rc;
    EXPECT_LE(rc, d);
    EXPECT_EQ(rc, oracle::rc(g));
  }
  EXPECT_LE(rc_exact(build_gdn(13, 4).graph, 4).rc, 4);
}

TEST(CycleColoring, RuleInstantiations) {
  EXPECT_EQ(color_gdn_cycle({{0, 1}, {1, 2}, {2, 0}}, 3), (std::vector<Color>{1, 2, 3}));
  EXPECT_EQ(color_gdn_cycle({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4),
            (std::vector<Color>{1, 2, 3, 4}));
  // d = 5: outbound 1,2,3 and, from the hub the other way, 5,4.
  const auto five = color_gdn_cycle({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, 5);
  EXPECT_EQ(five, (std::vector<Color>{1, 2, 3, 4, 5}));
  EXPECT_EQ(five.back(), 5);
  EXPECT_EQ(five[3], 4);
}

TEST(CycleColoring, AcceptsEitherEdgeOrientation) {
  EXPECT_EQ(color_gdn_cycle({{1, 0}, {2, 1}, {0, 2}}, 3), (std::vector<Color>{1, 2, 3}));
}

TEST(CycleColoring, IsABijectionOntoColors) {
  for (int d = 3; d <= 12; ++d) {
    std::vector<Edge> walk;
    for (int v = 0; v + 1 < d; ++v) walk.push_back({v, v + 1});
    walk.push_back({d - 1, 0});
    auto colors = color_gdn_cycle(walk, d);
    std::sort(colors.begin(), colors.end());
    for (int i = 0; i < d; ++i) EXPECT_EQ(colors[i], i + 1);
  }
}

TEST(CycleColoring, Errors) {
  EXPECT_THROW(color_gdn_cycle({{0, 1}, {1, 2}, {2, 0}}, 4), InputError);
  EXPECT_THROW(color_gdn_cycle({{0, 1}, {1, 2}, {2, 3}}, 3), InputError);  // not closed
  EXPECT_THROW(color_gdn_cycle({{0, 1}, {2, 3}, {3, 0}}, 3), InputError);  // broken walk
}

TEST(Named, PathCompleteCycleStar) {
  const auto p = build_named(NamedKind::path, 5);
  EXPECT_EQ(p.graph.size(), 4);
  EXPECT_EQ(p.coloring.used_colors(), 4);
  EXPECT_TRUE(is_rainbow_connected(p.graph, p.coloring));

  const auto k = build_named(NamedKind::complete, 6);
  EXPECT_EQ(k.graph.size(), 15);
  EXPECT_EQ(k.coloring.used_colors(), 1);
  EXPECT_TRUE(is_rainbow_connected(k.graph, k.coloring));

  const auto c = build_named(NamedKind::cycle, 6);
  EXPECT_EQ(c.graph.size(), 6);
  for (Color col : c.coloring.colors) {
    EXPECT_GE(col, 1);
    EXPECT_LE(col, 6);
  }
  EXPECT_TRUE(is_rainbow_connected(c.graph, c.coloring));

  const auto s = build_named(NamedKind::star, 5);
  EXPECT_EQ(s.graph.size(), 4);
  EXPECT_TRUE(is_rainbow_connected(s.graph, s.coloring));
}

TEST(Named, Errors) {
  EXPECT_THROW(build_named(NamedKind::cycle, 2), InputError);
  EXPECT_THROW(build_named(NamedKind::path, 0), InputError);
  EXPECT_THROW(parse_named_kind("wheel"), InputError);
}
