#include <gtest/gtest.h>

#include <random>

#include "stc/errors.h"
#include "stc/gallai.h"
#include "stc/labeling.h"
#include "support.h"

using namespace stc;
using namespace stc::test;

TEST(IsStcLabeling, Examples) {
  Graph p3 = path(3);
  EXPECT_FALSE(is_stc_labeling(p3, Labeling::all_strong(2)));
  EXPECT_TRUE(is_stc_labeling(petersen(), Labeling::all_weak(15)));
  Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(is_stc_labeling(c4, Labeling::from_strong(4, {0, 2})));
  EXPECT_FALSE(is_stc_labeling(c4, Labeling::from_strong(4, {0, 1})));
}

TEST(IsStcLabeling, RejectsForeignLabeling) {
  EXPECT_THROW(is_stc_labeling(path(3), Labeling::all_weak(5)), ContractError);
}

TEST(StcViolations, ReportsFirstWitnessOrAll) {
  Graph s = star(3);
  auto first = stc_violations(s, Labeling::all_strong(3));
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].first_edge, 0);
  EXPECT_EQ(first[0].second_edge, 1);
  EXPECT_EQ(first[0].center, 0);
  EXPECT_EQ(first[0].a, 1);
  EXPECT_EQ(first[0].b, 2);
  EXPECT_EQ(stc_violations(s, Labeling::all_strong(3), true).size(), 3u);
  EXPECT_TRUE(stc_violations(s, Labeling::from_strong(3, {1})).empty());
}

TEST(LabelingType, PartitionContract) {
  Labeling l = Labeling::from_partition(4, {0, 2}, {1, 3});
  EXPECT_EQ(l.strong_edges(), (std::vector<int>{0, 2}));
  EXPECT_EQ(l.weak_edges(), (std::vector<int>{1, 3}));
  EXPECT_EQ(l.strong_count(), 2);
  EXPECT_EQ(l.weak_count(), 2);
  EXPECT_THROW(Labeling::from_partition(3, {0, 1}, {1, 2}), ContractError);
  EXPECT_THROW(Labeling::from_partition(3, {0}, {1}), ContractError);
  EXPECT_THROW(Labeling::from_partition(2, {0, 5}, {1}), ContractError);
}

TEST(IsClusterGraph, Examples) {
  EXPECT_TRUE(is_cluster_graph(disjoint_union(complete(3), complete(2))));
  EXPECT_FALSE(is_cluster_graph(path(3)));
  EXPECT_FALSE(is_cluster_graph(paw()));
  EXPECT_TRUE(is_cluster_graph(Graph::empty(0)));
}

TEST(ClusterLabeling, Examples) {
  Labeling l = cluster_labeling(path(3), {{0}});
  EXPECT_EQ(l.strong_edges(), (std::vector<int>{1}));
  EXPECT_EQ(l.weak_edges(), (std::vector<int>{0}));

  Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Labeling two = cluster_labeling(c4, {{0, 2}});
  EXPECT_EQ(two.strong_count(), 2);
  EXPECT_TRUE(is_stc_labeling(c4, two));

  try {
    cluster_labeling(c4, {{0}});
    FAIL() << "expected a witness";
  } catch (const PreconditionError& e) {
    ASSERT_EQ(e.witness().size(), 3u);
    int a = e.witness()[0], center = e.witness()[1], b = e.witness()[2];
    Graph rest = delete_edges(c4, {0});
    EXPECT_TRUE(rest.has_edge(a, center));
    EXPECT_TRUE(rest.has_edge(center, b));
    EXPECT_FALSE(rest.has_edge(a, b));
  }
}

TEST(DeleteEdges, KeepsSurvivorOrder) {
  Graph g = delete_edges(paw(), {1});
  ASSERT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
}

TEST(IsClusterLabeling, DistinguishesClusterFromStc) {
  Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(is_cluster_labeling(c4, Labeling::from_strong(4, {0, 2})));
  EXPECT_FALSE(is_cluster_labeling(c4, Labeling::from_strong(4, {0, 1})));
  // Strong edges 01, 02 of a diamond: the strong path 1-0-2 is closed by 12.
  Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  Labeling l = Labeling::from_strong(5, {0, 1});
  EXPECT_TRUE(is_stc_labeling(diamond, l));
  EXPECT_FALSE(is_cluster_labeling(diamond, l));
}

// Deletion sets drawn at random, kept only when they leave a cluster graph.
TEST(LabelingProperties, ClusterLabelingsAreStcLabelings) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    Graph g = random_graph(rng, 6, 0.5);
    std::vector<int> d;
    for (int e = 0; e < g.edge_count(); ++e)
      if (rng() % 3 == 0) d.push_back(e);
    if (!is_cluster_graph(delete_edges(g, d))) {
      EXPECT_THROW(cluster_labeling(g, {d}), PreconditionError);
      continue;
    }
    Labeling l = cluster_labeling(g, {d});
    EXPECT_TRUE(is_stc_labeling(g, l));
    EXPECT_TRUE(is_cluster_labeling(g, l));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(LabelingProperties, StrongSetsAreSubsetClosed) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 300; ++rep) {
    Graph g = random_graph(rng, 6, 0.6);
    int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); mask += 1 + rng() % 97) {
      std::vector<int> strong;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) strong.push_back(e);
      if (!is_stc_labeling(g, Labeling::from_strong(m, strong))) continue;
      for (std::size_t drop = 0; drop < strong.size(); ++drop) {
        std::vector<int> smaller = strong;
        smaller.erase(smaller.begin() + drop);
        EXPECT_TRUE(is_stc_labeling(g, Labeling::from_strong(m, smaller)));
      }
    }
  }
}

TEST(LabelingProperties, ValidIffIndependentInConflictGraph) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 6, 0.5);
    ConflictGraph cg = gallai_graph(g);
    int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      bool independent = true;
      for (int e = 0; e < m && independent; ++e)
        if (mask >> e & 1)
          cg.adjacency[e].for_each([&](int f) {
            if (mask >> f & 1) independent = false;
          });
      std::vector<int> strong;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) strong.push_back(e);
      ASSERT_EQ(is_stc_labeling(g, Labeling::from_strong(m, strong)), independent);
    }
  }
}
