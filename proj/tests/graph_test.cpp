#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "test_graphs.hpp"

using namespace rainbow;
using namespace testgraphs;

TEST(Graph, FromEdgeListBuildsPath) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}};
  Graph g = Graph::from_edge_list(3, pairs);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, RejectsLoop) {
  const std::vector<std::pair<int, int>> pairs{{0, 0}};
  try {
    Graph::from_edge_list(3, pairs);
    FAIL() << "expected loop error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
}

TEST(Graph, RejectsOutOfRangeVertex) {
  const std::vector<std::pair<int, int>> pairs{{0, 3}};
  EXPECT_THROW(Graph::from_edge_list(3, pairs), InputError);
  EXPECT_THROW(Graph(33), InputError);
}

TEST(Graph, DeduplicatesEdges) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 1}, {2, 3}, {1, 0}};
  EXPECT_EQ(Graph::from_edge_list(4, pairs).size(), 2);
}

TEST(Graph, EdgeIndexMatchesSortedEdges) {
  Graph g = petersen();
  for (int i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    EXPECT_EQ(g.edge_index(e.u, e.v), i);
    EXPECT_EQ(g.edge_index(e.v, e.u), i);
  }
  EXPECT_EQ(g.edge_index(0, 2), -1);
}

TEST(Diameter, NamedGraphs) {
  EXPECT_EQ(diameter(complete(4)), 1);
  EXPECT_EQ(diameter(path(5)), 4);
  EXPECT_EQ(diameter(Graph(1)), 0);
  EXPECT_EQ(diameter(petersen()), oracle::diameter(petersen()));
  EXPECT_EQ(diameter(petersen()), 2);
}

TEST(Diameter, DisconnectedIsAnError) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}};
  EXPECT_THROW(diameter(Graph::from_edge_list(3, pairs)), DisconnectedError);
}

TEST(Diameter, PathAndPositivity) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(diameter(path(n)), n - 1);
    EXPECT_EQ(diameter(complete(n)) >= 1, n >= 2);
  }
}

TEST(Bridges, NamedGraphs) {
  EXPECT_EQ(bridges(path(4)).size(), 3u);
  EXPECT_TRUE(bridges(cycle(5)).empty());
  const auto b = bridges(c4_pendant());
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (Edge{0, 4}));
  EXPECT_EQ(b, oracle::bridges_by_deletion(c4_pendant()));
}

TEST(Bridges, MatchDeletionOracleOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected(EnumerationQuery::full(n), [](const Graph& g) {
      ASSERT_EQ(bridges(g), oracle::bridges_by_deletion(g)) << "n=" << g.order();
    });
  }
}

TEST(BridgeDecomposition, TwoTriangles) {
  const auto dec = bridge_decomposition(two_triangles());
  ASSERT_EQ(dec.bridges.size(), 1u);
  ASSERT_EQ(dec.components.size(), 2u);
  for (const auto& c : dec.components) {
    EXPECT_EQ(c.order, 3);
    EXPECT_EQ(c.kind, ComponentKind::complete);
  }
}

TEST(BridgeDecomposition, Cycle) {
  const auto dec = bridge_decomposition(cycle(6));
  EXPECT_TRUE(dec.bridges.empty());
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_EQ(dec.components[0].kind, ComponentKind::two_edge_connected);
  EXPECT_EQ(dec.components[0].diameter, 3);
}

TEST(BridgeDecomposition, Star) {
  const auto dec = bridge_decomposition(star(4));
  EXPECT_EQ(dec.bridges.size(), 4u);
  EXPECT_EQ(dec.components.size(), 5u);
  EXPECT_EQ(dec.trivial_count(), 5);
}

TEST(BridgeDecomposition, InvariantsOnEnumeratedGraphs) {
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected(EnumerationQuery::full(n), [](const Graph& g) {
      const auto dec = bridge_decomposition(g);
      EXPECT_EQ(dec.components.size(), dec.bridges.size() + 1);
      int covered = 0;
      for (const auto& c : dec.components) {
        covered += c.order;
        EXPECT_EQ(c.order == 1, c.kind == ComponentKind::trivial);
        if (c.order > 1) {
          EXPECT_TRUE(c.bridgeless);
          EXPECT_NE(c.kind, ComponentKind::other);
        }
      }
      EXPECT_EQ(covered, g.order());
      for (const Edge& b : dec.bridges) EXPECT_NE(dec.component_of[b.u], dec.component_of[b.v]);
    });
  }
}

TEST(BridgeDecomposition, RejectsDisconnected) {
  EXPECT_THROW(bridge_decomposition(Graph(2)), DisconnectedError);
}

TEST(MaxDegree, NamedGraphs) {
  EXPECT_EQ(max_degree(complete(4)), 3);
  EXPECT_EQ(max_degree(path(5)), 2);
  EXPECT_EQ(max_degree(Graph(3)), 0);
}
