#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"
#include "test_graphs.hpp"

using namespace rainbow;
using namespace testgraphs;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rainbow_enum_" + name);
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace

TEST(Canonical, IsomorphicPathsShareLabel) {
  const Graph relabeled = Graph::from_edge_list(
      4, std::vector<std::pair<int, int>>{{2, 0}, {0, 3}, {3, 1}});
  EXPECT_EQ(canonical_form(path(4)), canonical_form(relabeled));
  EXPECT_NE(canonical_form(path(4)), canonical_form(star(3)));
}

TEST(Canonical, ElevenGraphsOnFourVertices) {
  std::set<std::string> labels;
  std::set<std::uint64_t> brute;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = oracle::from_pair_mask(4, mask);
    labels.insert(canonical_form(g));
    brute.insert(oracle::brute_canonical(g));
  }
  EXPECT_EQ(brute.size(), 11u);
  EXPECT_EQ(labels.size(), 11u);
}

TEST(Canonical, AgreesWithPermutationOracleUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::uint64_t, std::string> by_brute;
    std::map<std::string, std::uint64_t> by_label;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::from_pair_mask(n, mask);
      const std::uint64_t b = oracle::brute_canonical(g);
      const std::string l = canonical_form(g);
      auto [it1, fresh1] = by_brute.emplace(b, l);
      auto [it2, fresh2] = by_label.emplace(l, b);
      ASSERT_EQ(it1->second, l);
      ASSERT_EQ(it2->second, b);
    }
  }
}

TEST(Canonical, InvariantUnderRelabelingOfSymmetricGraphs) {
  std::mt19937 rng(99);
  for (const Graph& g : {petersen(), complete(9), Graph(12), cycle(16), star(15)}) {
    const std::string label = canonical_form(g);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(canonical_form(shuffled(g, rng)), label);
    EXPECT_EQ(canonical_graph(g).size(), g.size());
  }
}

TEST(Canonical, RejectsOrdersAboveCap) { EXPECT_THROW(canonical_form(path(17)), InputError); }

TEST(Enumerate, CountsMatchLabeledIsoClassing) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(connected_graphs(EnumerationQuery::full(n)).size(),
              oracle::connected_classes(n).size())
        << "n=" << n;
  }
}

TEST(Enumerate, CountsMatchBurnsideOracle) {
  const auto expected = oracle::connected_counts(7);
  const std::vector<long long> frozen{0, 1, 1, 2, 6, 21, 112, 853};
  EXPECT_EQ(expected, frozen);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<long long>(connected_graphs(EnumerationQuery::full(n)).size()),
              expected[n]);
  }
}

TEST(Enumerate, WindowedCounts) {
  const auto k3 = connected_graphs(EnumerationQuery::edges(3, 3, 3));
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0], complete(3));
  // Trees on 7 vertices: 11 classes. Unicyclic on 6 vertices: 13.
  EXPECT_EQ(connected_graphs(EnumerationQuery::edges(7, 6, 6)).size(), 11u);
  EXPECT_EQ(connected_graphs(EnumerationQuery::edges(6, 6, 6)).size(), 13u);
  EXPECT_TRUE(connected_graphs(EnumerationQuery::edges(5, 2, 3)).empty());
}

TEST(Enumerate, WindowsPartitionTheFullRange) {
  const int n = 7;
  std::size_t total = 0;
  for (int m = n - 1; m <= n * (n - 1) / 2; ++m) {
    total += connected_graphs(EnumerationQuery::edges(n, m, m)).size();
  }
  EXPECT_EQ(total, 853u);
}

TEST(Enumerate, EmittedGraphsAreDistinctConnectedAndOrdered) {
  const auto graphs = connected_graphs(EnumerationQuery::edges(7, 8, 12));
  std::set<std::string> labels;
  int last_m = 0;
  for (const Graph& g : graphs) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.size(), 8);
    EXPECT_LE(g.size(), 12);
    EXPECT_GE(g.size(), last_m);
    last_m = g.size();
    EXPECT_TRUE(labels.insert(canonical_form(g)).second);
    EXPECT_EQ(graph6_encode(g), canonical_form(g));
  }
}

TEST(Enumerate, GeneratorCap) {
  EXPECT_THROW(connected_graphs(EnumerationQuery::full(10)), InputError);
}

TEST(Graph6Stream, ReadsValidLines) {
  const auto path = temp_file("ok.g6");
  {
    std::ofstream out(path);
    out << "D?{\nBg\n\nC~\n";
  }
  const auto graphs = read_graph6_stream(path);
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_EQ(graphs[2], complete(4));
}

TEST(Graph6Stream, ReportsBadLineNumber) {
  const auto path = temp_file("bad.g6");
  {
    std::ofstream out(path);
    out << "D?{\nBg\nD?|\n";
  }
  try {
    read_graph6_stream(path);
    FAIL() << "expected error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(Graph6Stream, RoundTripKeepsCanonicalLabels) {
  const auto path = temp_file("n5.g6");
  const auto graphs = connected_graphs(EnumerationQuery::full(5));
  write_graph6_stream(path, graphs);
  const auto back = read_graph6_stream(path);
  ASSERT_EQ(back.size(), graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(canonical_form(back[i]), canonical_form(graphs[i]));
  }
}

TEST(Graph6Stream, FileSourceDeduplicatesAndFilters) {
  const auto file = temp_file("mixed.g6");
  std::mt19937 rng(5);
  std::vector<Graph> graphs;
  for (const Graph& g : connected_graphs(EnumerationQuery::full(5))) {
    graphs.push_back(shuffled(g, rng));
    graphs.push_back(shuffled(g, rng));
  }
  graphs.push_back(Graph(5));  // disconnected
  graphs.push_back(testgraphs::path(4));   // wrong order
  write_graph6_stream(file, graphs);

  EnumerationQuery q = EnumerationQuery::full(5);
  q.graph6_file = file;
  const auto from_file = connected_graphs(q);
  const auto generated = connected_graphs(EnumerationQuery::full(5));
  EXPECT_EQ(from_file, generated);
}
