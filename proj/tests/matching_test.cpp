#include <gtest/gtest.h>

#include <random>

#include "cliquecover/matching.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/solver.hpp"
#include "test_graphs.hpp"

namespace cliquecover {
namespace {

using namespace cliquecover::testing;

void expect_valid_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.n(), false);
  for (auto [u, v] : m.edges) {
    EXPECT_LT(u, v);
    EXPECT_TRUE(g.has_edge(u, v));
    EXPECT_FALSE(used[u]);
    EXPECT_FALSE(used[v]);
    used[u] = used[v] = true;
  }
}

TEST(MaximumMatching, SmallExamples) {
  EXPECT_EQ(maximum_matching(path(3)).size(), 1u);
  EXPECT_EQ(maximum_matching(complete(4)).size(), 2u);
  EXPECT_EQ(matching_number(Graph(1)), 0u);
  EXPECT_EQ(matching_number(complete(2)), 1u);
  EXPECT_EQ(matching_number(Graph(0)), 0u);
}

TEST(MaximumMatching, ValuesFromEdgeSubsetEnumeration) {
  // Expected values computed by the edge-subset oracle, not hard-coded.
  const Graph c5 = cycle(5), c6 = cycle(6), pet = petersen();
  ASSERT_EQ(matching_by_edge_subsets(c5), 2u);
  ASSERT_EQ(matching_by_edge_subsets(c6), 3u);
  ASSERT_EQ(matching_by_edge_subsets(pet), 5u);
  EXPECT_EQ(matching_number(c5), 2u);
  EXPECT_EQ(matching_number(c6), 3u);
  EXPECT_EQ(matching_number(pet), 5u);
}

TEST(MaximumMatching, OddCyclesJoinedByPaths) {
  // Two triangles joined through a path, pendants on both; augmenting paths
  // have to pass through the triangles.
  Graph g(11, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {0, 7}, {6, 8},
               {1, 9}, {5, 10}});
  const std::size_t expected = matching_by_edge_subsets(g);
  EXPECT_EQ(matching_number(g), expected);
  expect_valid_matching(g, maximum_matching(g));
}

TEST(MaximumMatching, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 11;
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = random_graph(n, p, rng);
    Matching m = maximum_matching(g);
    expect_valid_matching(g, m);
    ASSERT_EQ(m.size(), oracle::brute_matching(g)) << "trial " << trial;
  }
}

TEST(MaximumMatching, Deterministic) {
  std::mt19937_64 rng(8);
  Graph g = random_graph(40, 0.1, rng);
  EXPECT_EQ(maximum_matching(g).edges, maximum_matching(g).edges);
}

TEST(MaximumMatching, VertexDeletionLowersByAtMostOne) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(3 + rng() % 12, 0.3, rng);
    const std::size_t m = matching_number(g);
    for (Vertex v = 0; v < g.n(); ++v) {
      const std::size_t mv =
          matching_number(induced(g, VertexSet::range(g.n()).without(VertexSet{v})).graph);
      EXPECT_TRUE(m == mv || m == mv + 1);
    }
  }
}

TEST(TriangleFreeCover, C5) {
  CliqueCover c = triangle_free_cover(cycle(5));
  EXPECT_EQ(c.size(), 3u);
  std::size_t pairs = 0, singles = 0;
  for (const auto& s : c.cliques) (s.size() == 2 ? pairs : singles)++;
  EXPECT_EQ(pairs, 2u);
  EXPECT_EQ(singles, 1u);
  EXPECT_TRUE(verify_cover(cycle(5), c).valid);
}

TEST(TriangleFreeCover, SingleVertex) {
  EXPECT_EQ(triangle_free_cover(Graph(1)).cliques, (std::vector<VertexSet>{VertexSet{0}}));
}

TEST(TriangleFreeCover, C6IsThreeEdges) {
  CliqueCover c = triangle_free_cover(cycle(6));
  ASSERT_EQ(c.size(), 3u);
  for (const auto& s : c.cliques) EXPECT_EQ(s.size(), 2u);
}

TEST(TriangleFreeCover, RejectsTriangleWhenChecking) {
  EXPECT_THROW(triangle_free_cover(complete(3), true), TriangleFound);
}

TEST(TriangleFreeCover, IsAMinimumPartitionOnTriangleFreeGraphs) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 150) {
    Graph g = random_graph(1 + rng() % 12, 0.25, rng);
    if (find_triangle(g)) continue;
    ++checked;
    CliqueCover c = triangle_free_cover(g, true);
    EXPECT_EQ(c.size(), g.n() - matching_number(g));
    EXPECT_EQ(c.size(), oracle::brute_theta(g));
    std::vector<int> hits(g.n(), 0);
    for (const auto& s : c.cliques) {
      EXPECT_LE(s.size(), 2u);
      for (Vertex v : s) ++hits[v];
    }
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_TRUE(verify_cover(g, c).valid);
  }
}

}  // namespace
}  // namespace cliquecover
