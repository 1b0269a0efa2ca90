#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperell/annotate.hpp"
#include "hyperell/canonical.hpp"
#include "hyperell/graph.hpp"
#include "hyperell/trees.hpp"
#include "test_util.hpp"

using namespace hyperell;
using hyperell::testing::figure1;
using hyperell::testing::single_vertex;

TEST(Graph, RejectsBrokenInvolution) {
  EXPECT_THROW(Graph({1, 2, 0}, {{0, 1, 2}}, {0}), InvalidGraph);
  EXPECT_THROW(Graph({0, 1}, {{0}, {0, 1}}, {0, 0}), InvalidGraph);
  EXPECT_THROW(Graph({0, 1}, {{0}}, {0}), InvalidGraph);
  EXPECT_THROW(Graph({0}, {{0}}, {0, 1}), InvalidGraph);
  EXPECT_THROW(Graph({0}, {{0}}, {-1}), InvalidGraph);
}

TEST(Graph, RejectsBadNumbering) {
  EXPECT_THROW(Graph({0, 1}, {{0, 1}}, {0}, {1, 1}), InvalidGraph);
  EXPECT_THROW(Graph({1, 0, 2}, {{0, 1, 2}}, {0}, {1, 0, 1}), InvalidGraph);
  EXPECT_NO_THROW(Graph({1, 0, 2}, {{0, 1, 2}}, {0}, {0, 0, 1}));
}

TEST(Betti, Figure1HasTwoCycles) { EXPECT_EQ(betti1(figure1()), 2); }
TEST(Betti, SingleVertex) { EXPECT_EQ(betti1(single_vertex(0, 3)), 0); }
TEST(Betti, OneLoop) { EXPECT_EQ(betti1(single_vertex(0, 1, 1)), 1); }

TEST(Betti, DisconnectedThrows) {
  GraphBuilder b;
  b.add_vertex(1);
  b.add_vertex(1);
  EXPECT_THROW(betti1(b.build()), DisconnectedGraph);
  EXPECT_THROW(genus(b.build()), DisconnectedGraph);
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(figure1()), 2);
  EXPECT_EQ(graph_type(figure1()), (GraphType{2, 3}));
  EXPECT_EQ(genus(single_vertex(5, 0)), 5);
  EXPECT_EQ(genus(single_vertex(0, 0, 4)), 4);
}

TEST(Stability, Examples) {
  EXPECT_TRUE(is_stable(figure1()));
  EXPECT_FALSE(is_stable(single_vertex(0, 2)));
  EXPECT_TRUE(is_stable(single_vertex(1, 1)));
  EXPECT_FALSE(is_stable(single_vertex(1, 0)));
}

TEST(Stabilize, StableGraphIsFixed) {
  const Graph g = figure1();
  EXPECT_EQ(stabilize(g), g);
}

TEST(Stabilize, SplicesPathMiddle) {
  GraphBuilder b;
  const auto v1 = b.add_vertex(1), v2 = b.add_vertex(0), v3 = b.add_vertex(1);
  b.add_edge(v1, v2);
  b.add_edge(v2, v3);
  const Graph s = stabilize(b.build());
  EXPECT_EQ(s.vertex_count(), 2u);
  EXPECT_EQ(s.edge_count(), 1u);
  EXPECT_TRUE(is_stable(s));
  EXPECT_EQ(genus(s), 2);
}

TEST(Stabilize, ParallelEdgesBecomeLoop) {
  GraphBuilder b;
  const auto big = b.add_vertex(2), small = b.add_vertex(0);
  b.add_edge(big, small);
  b.add_edge(big, small);
  const Graph s = stabilize(b.build());
  ASSERT_EQ(s.vertex_count(), 1u);
  EXPECT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.partner(s.edges()[0].first), s.edges()[0].second);
  EXPECT_EQ(s.vertex_of(s.edges()[0].first), s.vertex_of(s.edges()[0].second));
  EXPECT_EQ(genus(s), 3);
}

TEST(Stabilize, DropsTailsAndKeepsNumbering) {
  GraphBuilder b;
  const auto core = b.add_vertex(0), mid = b.add_vertex(0), tip = b.add_vertex(0);
  b.add_leaf(core, 1);
  b.add_leaf(core, 2);
  b.add_leaf(core, 3);
  b.add_edge(core, mid);
  b.add_edge(mid, tip);  // a dangling chain of genus-0 vertices
  const Graph s = stabilize(b.build());
  EXPECT_EQ(s.vertex_count(), 1u);
  EXPECT_EQ(s.leaf_count(), 3u);
  std::set<int> numbers;
  for (FlagId f : s.leaves()) numbers.insert(s.leaf_number(f));
  EXPECT_EQ(numbers, (std::set<int>{1, 2, 3}));
}

TEST(Stabilize, UnstableTypeThrows) {
  EXPECT_THROW(stabilize(single_vertex(0, 2)), Unstabilizable);
  EXPECT_THROW(stabilize(single_vertex(1, 0)), Unstabilizable);
}

TEST(Stabilize, PreservesGenusAndLeaves) {
  std::mt19937 rng(11);
  int done = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = hyperell::testing::random_graph(rng, 1 + trial % 6, trial % 4, trial % 5, 1);
    const int gg = genus(g);
    if (2 * gg - 2 + static_cast<int>(g.leaf_count()) <= 0) {
      EXPECT_THROW(stabilize(g), Unstabilizable);
      continue;
    }
    const Graph s = stabilize(g);
    EXPECT_TRUE(is_stable(s));
    EXPECT_EQ(genus(s), gg);
    EXPECT_EQ(s.leaf_count(), g.leaf_count());
    ++done;
  }
  EXPECT_GT(done, 200);
}

TEST(Contract, EmptySetIsIsomorphic) {
  EXPECT_EQ(canonical_form(contract_edges(figure1(), {})), canonical_form(figure1()));
}

TEST(Contract, OneParallelEdgeOfFigure1) {
  const Graph c = contract_edges(figure1(), {3});
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.genus_label(0), 0);
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_EQ(genus(c), 2);
}

TEST(Contract, EverythingGivesGenusLabel) {
  const Graph g = figure1();
  std::vector<FlagId> all;
  for (auto [f, h] : g.edges()) all.push_back(f);
  const Graph c = contract_edges(g, all);
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.genus_label(0), 2);
  EXPECT_EQ(c.leaf_count(), 3u);
}

TEST(Contract, UnknownEdgeThrows) {
  EXPECT_THROW(contract_edges(figure1(), {0}), UnknownEdge);
  EXPECT_THROW(contract_edges(figure1(), {42}), UnknownEdge);
}

TEST(Contract, GenusInvariantOnAllSubsets) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = hyperell::testing::random_graph(rng, 2 + trial % 3, trial % 3, 1 + trial % 3, 1);
    const auto edges = g.edges();
    ASSERT_LE(edges.size(), 6u);
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
      std::vector<FlagId> pick;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask >> i & 1) pick.push_back(edges[i].first);
      EXPECT_EQ(genus(contract_edges(g, pick)), genus(g));
    }
  }
}

TEST(Canonical, RelabelingInvariant) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = hyperell::testing::random_graph(rng, 1 + trial % 4, trial % 3, trial % 3, 1);
    ASSERT_LE(g.flag_count(), 16u);
    const Graph h = hyperell::testing::relabel(g, rng);
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << trial;
    ASSERT_EQ(automorphism_count(g), automorphism_count(h));
  }
}

TEST(Canonical, NumberedRelabelingInvariant) {
  std::mt19937 rng(3);
  for (const Graph& t : enumerate_trees(6)) {
    const Graph h = hyperell::testing::relabel(t, rng);
    EXPECT_EQ(canonical_form(t), canonical_form(h));
  }
}

TEST(Canonical, DistinguishesShapes) {
  // Four leaves: the star and the one-edge tree.
  const auto trees = enumerate_orbits(4);
  ASSERT_EQ(trees.size(), 2u);
  EXPECT_NE(trees[0].canonical_key, trees[1].canonical_key);
  // Genus labels and numberings matter.
  EXPECT_NE(canonical_form(single_vertex(1, 1)), canonical_form(single_vertex(0, 1, 1)));
  const auto numbered = enumerate_trees(4, 1);
  ASSERT_EQ(numbered.size(), 3u);
  EXPECT_NE(canonical_form(numbered[0]), canonical_form(numbered[1]));
}

TEST(Canonical, BlockSwapOfT24) {
  // T_{2,4}: v0 carries 5..10, v1 carries 1,2 and v2 carries 3,4.
  const auto build = [](int a, int b, int c, int d) {
    GraphBuilder g;
    const auto v0 = g.add_vertex(0), v1 = g.add_vertex(0), v2 = g.add_vertex(0);
    for (int k = 5; k <= 10; ++k) g.add_leaf(v0, k);
    g.add_edge(v0, v1);
    g.add_edge(v0, v2);
    g.add_leaf(v1, a);
    g.add_leaf(v1, b);
    g.add_leaf(v2, c);
    g.add_leaf(v2, d);
    return g.build();
  };
  EXPECT_EQ(canonical_form(build(1, 2, 3, 4)), canonical_form(build(3, 4, 1, 2)));
  EXPECT_NE(canonical_form(build(1, 2, 3, 4)), canonical_form(build(1, 3, 2, 4)));
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_count(single_vertex(0, 3)), 6u);
  EXPECT_EQ(automorphism_count(single_vertex(0, 0, 2)), 8u);  // (S_2 wr S_2) on two loops
  for (const Graph& t : enumerate_trees(5)) EXPECT_EQ(automorphism_count(t), 1u);
  // Figure 1 with numbered leaves: the three parallel edges permute freely.
  EXPECT_EQ(automorphism_count(figure1().with_default_numbering()), 6u);
}

TEST(Automorphisms, RootedT24) {
  const Graph t = build_T_lg_graph(2, 4);
  EXPECT_EQ(automorphism_count(t.unnumbered(), {leaf_flag(t, 10)}), 960u);
}

TEST(Order, Examples) {
  const Graph g = figure1();
  EXPECT_TRUE(leq(g, g));
  const auto one_edge = enumerate_trees(5, 1);
  const auto smooth = enumerate_trees(5, 0);
  ASSERT_EQ(smooth.size(), 1u);
  for (const Graph& t : one_edge) EXPECT_TRUE(leq(t, smooth[0]));
  EXPECT_FALSE(leq(one_edge[0], one_edge[1]));
  EXPECT_FALSE(leq(one_edge[1], one_edge[0]));
  EXPECT_THROW(leq(g, single_vertex(2, 2)), TypeMismatch);
}

TEST(Order, ReflexiveTransitiveOnGamma06Orbits) {
  std::vector<Graph> classes;
  for (const auto& c : enumerate_orbits(6)) classes.push_back(c.representative.unnumbered());
  const std::size_t n = classes.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = leq(classes[i], classes[j]);
  for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(le[i][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k]) {
          EXPECT_TRUE(le[i][k]) << i << " " << j << " " << k;
        }
}

TEST(Order, ReflexiveTransitiveOnNumberedGamma05) {
  const auto trees = enumerate_trees(5);
  const std::size_t n = trees.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = leq(trees[i], trees[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k]) {
          ASSERT_TRUE(le[i][k]);
        }
  // Each maximal tree lies below exactly two one-edge trees.
  for (std::size_t i = 0; i < n; ++i) {
    if (trees[i].edge_count() != 2) continue;
    int above = 0;
    for (std::size_t j = 0; j < n; ++j) above += trees[j].edge_count() == 1 && le[i][j];
    EXPECT_EQ(above, 2);
  }
}
