#include <gtest/gtest.h>

#include "hyperell/annotate.hpp"
#include "hyperell/canonical.hpp"
#include "hyperell/pushforward.hpp"
#include "test_util.hpp"

using namespace hyperell;

TEST(Pushforward, SmoothTreeGivesSmoothCurve) {
  for (int g = 2; g <= 6; ++g) {
    const Graph c = pushforward(build_T_lg(0, g));
    ASSERT_EQ(c.vertex_count(), 1u);
    EXPECT_EQ(c.genus_label(0), g);
    EXPECT_EQ(c.edge_count(), 0u);
    EXPECT_EQ(c.leaf_count(), 0u);
  }
}

TEST(Pushforward, TggIsRationalWithGLoops) {
  for (int g = 2; g <= 6; ++g) {
    const Graph c = pushforward(build_T_lg(g, g));
    ASSERT_EQ(c.vertex_count(), 1u) << g;
    EXPECT_EQ(c.genus_label(0), 0);
    EXPECT_EQ(static_cast<int>(c.edge_count()), g);
    EXPECT_EQ(genus(c), g);
  }
}

TEST(Pushforward, T24) {
  const Graph c = pushforward(build_T_lg(2, 4));
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.genus_label(0), 2);
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_EQ(genus(c), 4);
}

TEST(Pushforward, OddEdgeGivesSeparatingNode) {
  // 3|3 split in genus 2: two genus-1 components meeting once.
  for (const Graph& s : enumerate_trees(6, 1)) {
    const AnnotatedTree a = annotate(s);
    if (a.odd_edge_count() != 1) continue;
    const Graph c = pushforward(a);
    ASSERT_EQ(c.vertex_count(), 2u);
    EXPECT_EQ(c.genus_label(0), 1);
    EXPECT_EQ(c.genus_label(1), 1);
    EXPECT_EQ(c.edge_count(), 1u);
    return;
  }
  FAIL() << "no 3|3 split found";
}

TEST(Pushforward, CoverBeforeStabilization) {
  const CoverGraph cover = admissible_cover(build_T_lg(1, 2));
  // Centre rho=4 gives genus 1; the outer vertex has rho=2, genus 0; the even
  // edge lifts to two edges.
  EXPECT_EQ(cover.graph.vertex_count(), 2u);
  EXPECT_EQ(cover.graph.edge_count(), 2u);
  EXPECT_EQ(genus(cover.graph), 2);
  EXPECT_FALSE(cover.trace.empty());
  const Graph c = stabilize(cover.graph);
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.genus_label(0), 1);
  EXPECT_EQ(c.edge_count(), 1u);
}

TEST(Pushforward, GenusPreserved) {
  for (int g = 2; g <= 4; ++g)
    for (const auto& c : enumerate_orbits(2 * g + 2)) {
      const Graph image = pushforward(annotate(c.representative));
      EXPECT_EQ(genus(image), g) << c.canonical_key;
      EXPECT_TRUE(is_stable(image));
      EXPECT_EQ(image.leaf_count(), 0u);
    }
}

TEST(Pushforward, RationalComponentsMatchImage) {
  for (int g = 2; g <= 4; ++g)
    for (const auto& c : enumerate_orbits(2 * g + 2)) {
      const AnnotatedTree t = annotate(c.representative);
      EXPECT_EQ(rational_component_count(t), genus_zero_vertex_count(pushforward(t))) << c.canonical_key;
      EXPECT_EQ(in_filtration(t, 0), is_good(t)) << c.canonical_key;
    }
}

TEST(Pushforward, OddLeafCountRejected) {
  AnnotatedTree t = build_T_lg(1, 2);
  t.tree = enumerate_trees(5, 0).front();
  EXPECT_THROW(admissible_cover(t), OddLeafTotal);
  EXPECT_THROW(rational_component_count(t), OddLeafTotal);
}

TEST(NodeBound, Holds) {
  for (int g = 2; g <= 4; ++g)
    for (int k = 0; k <= 2; ++k) {
      const auto r = node_bound_report(g, k);
      EXPECT_TRUE(r.ok()) << g << " " << k << " " << (r.violations.empty() ? "" : r.violations.front());
      EXPECT_LE(r.max_edges, g + k - 1);
    }
  EXPECT_EQ(node_bound_report(2, 0).max_edges, 1);
  EXPECT_THROW(node_bound_report(5, 0), OutOfRange);
}

TEST(Injectivity, DistinctImages) {
  const std::vector<std::size_t> classes{7, 32, 190};
  for (int g = 2; g <= 4; ++g) {
    const auto r = injectivity_report(g);
    EXPECT_EQ(r.classes, classes[static_cast<std::size_t>(g - 2)]);
    EXPECT_TRUE(r.injective()) << g << ": " << r.distinct_images;
  }
  EXPECT_THROW(injectivity_report(1), OutOfRange);
}
