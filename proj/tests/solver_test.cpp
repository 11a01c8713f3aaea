#include <gtest/gtest.h>

#include <random>

#include "cliquecover/generate.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/solver.hpp"
#include "test_graphs.hpp"

namespace cliquecover {
namespace {

using namespace cliquecover::testing;

void expect_partition(const Graph& g, const CliqueCover& c) {
  std::vector<int> hits(g.n(), 0);
  for (const auto& s : c.cliques) {
    for (Vertex v : s) ++hits[v];
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(MinCliqueCover, Examples) {
  auto k5 = min_clique_cover(complete(5), true);
  EXPECT_EQ(k5.theta, 1u);
  EXPECT_EQ(k5.cover.cliques, (std::vector<VertexSet>{VertexSet{0, 1, 2, 3, 4}}));

  EXPECT_EQ(min_clique_cover(cycle(5), true).theta, 3u);

  ASSERT_EQ(oracle::brute_theta(bowtie()), 2u);
  auto bt = min_clique_cover(bowtie(), true);
  EXPECT_EQ(bt.theta, 2u);
  EXPECT_TRUE(verify_cover(bowtie(), bt.cover).valid);

  ASSERT_EQ(oracle::brute_theta(petersen()), 5u);
  EXPECT_EQ(min_clique_cover(petersen(), true).theta, 5u);

  ASSERT_EQ(oracle::brute_theta(path(5)), 3u);
  EXPECT_EQ(min_clique_cover(path(5), true).theta, 3u);
}

TEST(MinCliqueCover, EmptyAndDisconnected) {
  auto empty = min_clique_cover(Graph(0), true);
  EXPECT_EQ(empty.theta, 0u);
  EXPECT_TRUE(empty.cover.cliques.empty());

  // K3 + P3 + K1: 1 + 2 + 1.
  Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  auto r = min_clique_cover(g, true);
  EXPECT_EQ(r.theta, 4u);
  EXPECT_TRUE(verify_cover(g, r.cover).valid);
}

TEST(MinCliqueCover, ValidationRejectsOutOfClass) {
  try {
    min_clique_cover(cycle(4), true);
    FAIL() << "expected ClassViolation";
  } catch (const ClassViolation& e) {
    EXPECT_EQ(e.kind(), ClassViolation::Kind::kC4);
    EXPECT_EQ(e.witness(), (std::vector<Vertex>{0, 1, 2, 3}));
  }
  try {
    min_clique_cover(bull(), true);
    FAIL() << "expected ClassViolation";
  } catch (const ClassViolation& e) {
    EXPECT_EQ(e.kind(), ClassViolation::Kind::kBull);
    EXPECT_TRUE(induces(bull(), e.witness(), bull()));
  }
}

TEST(MinCliqueCover, StructureFailureOnIrreducibleOutOfClassGraph) {
  // The octahedron is irreducible and 2-connected with triangles.
  ASSERT_FALSE(is_reducible(octahedron()));
  EXPECT_THROW(min_clique_cover(octahedron(), false), StructureFailure);
}

TEST(MinCliqueCover, UnvalidatedOutOfClassStillValidWhenItReturns) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(1 + rng() % 10, 0.4, rng);
    try {
      auto r = min_clique_cover(g, false);
      EXPECT_TRUE(verify_cover(g, r.cover).valid);
      EXPECT_GE(r.theta, oracle::brute_theta(g));
    } catch (const StructureFailure&) {
      EXPECT_FALSE(in_class(g));
    }
  }
}

TEST(SolveConnected, WheelReinsertsHub) {
  ASSERT_EQ(oracle::brute_theta(wheel5()), 3u);
  auto r = solve_connected(wheel5());
  EXPECT_EQ(r.theta, 3u);
  EXPECT_EQ(r.stats.reductions, 1u);
  EXPECT_TRUE(verify_cover(wheel5(), r.cover).valid);
  bool hub_in_triangle = false;
  for (const auto& c : r.cover.cliques) hub_in_triangle |= c.contains(5) && c.size() == 3;
  EXPECT_TRUE(hub_in_triangle);
}

TEST(SolveConnected, Basics) {
  EXPECT_EQ(solve_connected(complete(2)).theta, 1u);
  EXPECT_THROW(solve_connected(Graph(2)), NotConnected);
}

TEST(SolveConnected, TriangleFreeUsesMatchingIdentity) {
  gen::GenSpec spec{gen::Family::kGirth5, 40, 0.1, 0, 0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed = seed;
    Graph g = gen::generate(spec);
    auto comps = components(g);
    for (const auto& comp : comps) {
      Graph h = induced(g, comp).graph;
      EXPECT_EQ(solve_connected(h).theta, h.n() - matching_number(h));
    }
  }
}

TEST(SolveConnected, TwoC5sSharingAVertex) {
  Graph g(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
  ASSERT_EQ(oracle::brute_matching(g), 4u);
  auto r = solve_connected(g);
  EXPECT_EQ(r.theta, 5u);
  EXPECT_EQ(r.stats.cutset_splits, 0u);
}

TEST(SplitAtCutset, PawWithTailTakesTheMatchedBranch) {
  const Graph g = paw_with_tail();
  auto cert = find_terminal_cutset(g);
  ASSERT_TRUE(cert);
  ASSERT_EQ(cert->v, 0u);
  ASSERT_EQ(cert->parts[*cert->terminal_part], (VertexSet{3}));
  // m(G_i) = 1 for the edge {0,3}; m(G_i - v) = 0.
  EXPECT_EQ(matching_number(induced(g, VertexSet{0, 3}).graph), 1u);
  EXPECT_EQ(matching_number(induced(g, VertexSet{3}).graph), 0u);

  ASSERT_EQ(oracle::brute_theta(g), 2u);
  auto r = split_at_cutset(g, *cert);
  EXPECT_EQ(r.theta, 2u);
  EXPECT_EQ(r.cover.cliques, (std::vector<VertexSet>{VertexSet{0, 3}, VertexSet{1, 2}}));
  EXPECT_EQ(r.stats.cutset_splits, 1u);
}

TEST(SplitAtCutset, StarCentre) {
  const Graph g = star(2);
  CutCertificate cert{0, {VertexSet{1}, VertexSet{2}}, 1, 0};
  auto r = split_at_cutset(g, cert);
  EXPECT_EQ(r.theta, 2u);
  EXPECT_TRUE(verify_cover(g, r.cover).valid);
  EXPECT_EQ(r.cover.cliques[0], (VertexSet{0, 1}));
}

TEST(SplitAtCutset, UnmatchedBranchKeepsVInTheRest) {
  // v = 0 with lobe 0-1-2: m(lobe) = 1 = m(lobe - v), so v stays with the
  // triangle 0,3,4.
  Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  CutCertificate cert{0, components_without(g, 0), 2, 0};
  ASSERT_EQ(cert.parts[0], (VertexSet{1, 2}));
  EXPECT_EQ(matching_number(induced(g, VertexSet{0, 1, 2}).graph), 1u);
  EXPECT_EQ(matching_number(induced(g, VertexSet{1, 2}).graph), 1u);
  auto r = split_at_cutset(g, cert);
  EXPECT_EQ(r.theta, oracle::brute_theta(g));
  EXPECT_TRUE(verify_cover(g, r.cover).valid);
  EXPECT_TRUE(std::find(r.cover.cliques.begin(), r.cover.cliques.end(), VertexSet{0, 3, 4}) !=
              r.cover.cliques.end());
}

TEST(SplitAtCutset, RequiresTerminalPart) {
  CutCertificate cert{0, {VertexSet{1}, VertexSet{2}}, 1, std::nullopt};
  EXPECT_THROW(split_at_cutset(star(2), cert), std::invalid_argument);
}

TEST(Reinsert, Examples) {
  ReductionTrace k2{{{0, 1}}};
  EXPECT_EQ(reinsert(CliqueCover{{VertexSet{1}}}, k2).cliques,
            (std::vector<VertexSet>{VertexSet{0, 1}}));

  ReductionTrace k3{{{0, 1}, {1, 2}}};
  EXPECT_EQ(reinsert(CliqueCover{{VertexSet{2}}}, k3).cliques,
            (std::vector<VertexSet>{VertexSet{0, 1, 2}}));

  // Wheel: rim 0..4, hub 5 reinserted next to witness 0.
  CliqueCover rim{{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}}};
  auto w = reinsert(rim, ReductionTrace{{{5, 0}}});
  EXPECT_EQ(w.cliques[0], (VertexSet{0, 1, 5}));
  EXPECT_TRUE(verify_cover(wheel5(), w).valid);

  EXPECT_THROW(reinsert(CliqueCover{{VertexSet{1}}}, ReductionTrace{{{0, 7}}}), std::logic_error);
}

TEST(Reinsert, PreservesSizeAndValidity) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(1 + rng() % 12, 0.5, rng);
    Reduction red = reduce(g);
    // Any valid cover of the reduced graph: singletons.
    CliqueCover c;
    for (Vertex v : red.surviving) c.cliques.push_back(VertexSet{v});
    auto back = reinsert(c, red.trace);
    EXPECT_EQ(back.size(), c.size());
    EXPECT_TRUE(verify_cover(g, back).valid);
    expect_partition(g, back);
  }
}

TEST(VerifyCover, Examples) {
  EXPECT_TRUE(verify_cover(complete(2), CliqueCover{{VertexSet{0, 1}}}).valid);
  EXPECT_TRUE(verify_cover(path(3), CliqueCover{{VertexSet{0, 1}, VertexSet{2}}}).valid);
  auto bad = verify_cover(path(3), CliqueCover{{VertexSet{0, 2}, VertexSet{1}}});
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.violation, "set 0 not a clique");
  auto missing = verify_cover(path(3), CliqueCover{{VertexSet{0, 1}}});
  EXPECT_EQ(missing.violation, "vertex 2 uncovered");
  EXPECT_FALSE(verify_cover(path(3), CliqueCover{{VertexSet{0, 1}, VertexSet{2, 9}}}).valid);
  // Overlap is fine for a cover.
  EXPECT_TRUE(verify_cover(path(3), CliqueCover{{VertexSet{0, 1}, VertexSet{1, 2}}}).valid);
}

TEST(MinColouring, Examples) {
  auto k3 = min_colouring(complete(3), true);
  EXPECT_EQ(k3.num_colours, 3u);
  EXPECT_EQ(min_colouring(Graph(4), true).num_colours, 1u);
  ASSERT_EQ(oracle::brute_chromatic(path(4)), 2u);
  auto p4 = min_colouring(path(4), true);
  EXPECT_EQ(p4.num_colours, 2u);
  for (auto [u, v] : path(4).edges()) EXPECT_NE(p4.colour_of[u], p4.colour_of[v]);
}

TEST(MinColouring, RejectsComplementOutOfClass) {
  // 2K2 is the complement of C4.
  Graph two_k2(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(min_colouring(two_k2, true), ClassViolation);
}

TEST(MinCliqueCover, MatchesOracleOnEnumeratedClassGraphs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::enumerate_class_graphs(n)) {
      auto r = min_clique_cover(g, true);
      ASSERT_EQ(r.theta, oracle::brute_theta(g)) << "n = " << n;
      ASSERT_TRUE(verify_cover(g, r.cover).valid);
      expect_partition(g, r.cover);
    }
  }
}

TEST(MinCliqueCover, Deterministic) {
  gen::GenSpec spec{gen::Family::kTwinExpand, 60, 0.06, 60, 5};
  Graph g = gen::generate(spec);
  auto a = min_clique_cover(g, true);
  auto b = min_clique_cover(g, true);
  EXPECT_EQ(a.cover, b.cover);
  for (std::size_t i = 1; i < a.cover.size(); ++i) {
    EXPECT_LT(a.cover.cliques[i - 1], a.cover.cliques[i]);
  }
}

}  // namespace
}  // namespace cliquecover
