#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <random>

#include "stc/generators.h"
#include "stc/kernels.h"
#include "stc/oracle.h"
#include "support.h"

using namespace stc;
using namespace stc::test;

namespace {

int min_weak(const Graph& g) { return g.edge_count() - stc_optimum_by_subsets(g); }

Graph graph_of_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST(CriticalCliques, Examples) {
  auto k4 = critical_cliques(complete(4));
  ASSERT_EQ(k4.size(), 1);
  EXPECT_EQ(k4.cliques[0].size(), 4);
  EXPECT_TRUE(k4.closed[0]);

  auto p3 = critical_cliques(path(3));
  ASSERT_EQ(p3.size(), 3);
  EXPECT_EQ(p3.closed, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(p3.neighborhood(p3.clique_of[1]), VertexSet(3, {0, 2}));

  auto demo = critical_cliques(rule1_demo());
  ASSERT_EQ(demo.size(), 3);
  EXPECT_EQ(demo.cliques[0], VertexSet(4, {0, 1}));
  EXPECT_TRUE(demo.closed[0]);
  EXPECT_FALSE(demo.closed[demo.clique_of[2]]);
  EXPECT_EQ(demo.second_neighborhood(0), VertexSet(4, {3}));
  EXPECT_EQ(boundary_edge_count(rule1_demo(), demo, 0), 1);
}

TEST(CriticalCliques, DecompositionInvariants) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 400; ++rep) {
    Graph g = random_graph(rng, 3 + rep % 7, 0.2 + 0.15 * (rep % 5));
    auto d = critical_cliques(g);
    int n = g.vertex_count();
    VertexSet seen(n);
    for (int k = 0; k < d.size(); ++k) {
      const VertexSet& K = d.cliques[k];
      EXPECT_TRUE(is_clique(g, K));
      EXPECT_FALSE(seen.intersects(K));
      seen |= K;
      int rep_v = K.first();
      VertexSet closed_nb = g.neighbor_set(rep_v);
      closed_nb.insert(rep_v);
      K.for_each([&](int v) {
        EXPECT_EQ(d.clique_of[v], k);
        VertexSet c = g.neighbor_set(v);
        c.insert(v);
        EXPECT_EQ(c, closed_nb);
      });
      for (int j = 0; j < d.size(); ++j) {
        if (j == k) continue;
        bool all = true;
        d.cliques[j].for_each([&](int u) {
          K.for_each([&](int v) { all = all && g.has_edge(u, v); });
        });
        bool listed = std::find(d.cc_adjacency[k].begin(), d.cc_adjacency[k].end(), j) != d.cc_adjacency[k].end();
        EXPECT_EQ(listed, all);
        if (listed) {
          EXPECT_FALSE(d.closed[k] && d.closed[j]) << "adjacent closed cliques";
        }
      }
      EXPECT_EQ(d.closed[k], is_clique(g, d.neighborhood(k)));
    }
    EXPECT_EQ(seen, VertexSet::full(n));
  }
}

TEST(Rule1, Examples) {
  auto demo = rule1_apply_once(rule1_demo(), 1);
  ASSERT_TRUE(demo.has_value());
  EXPECT_EQ(demo->budget, 0);
  EXPECT_EQ(demo->graph.vertex_count(), 1);
  EXPECT_EQ(demo->vertex_map, (std::vector<int>{3}));
  ASSERT_EQ(demo->trace.size(), 1u);
  EXPECT_EQ(demo->trace[0].rule, "rule1");
  EXPECT_EQ(demo->trace[0].removed, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(demo->trace[0].budget_delta, 1);

  for (int k = 0; k < 5; ++k) EXPECT_FALSE(rule1_apply_once(cycle(4), k).has_value());

  auto k4 = rule1_apply_once(complete(4), 0);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->graph.vertex_count(), 0);
  EXPECT_EQ(k4->budget, 0);
}

TEST(Rule1, NegativeBudgetIsNo) {
  auto r = rule1_apply_once(rule1_demo(), 0);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->verdict, Verdict::No);
}

TEST(KernelizeK, Examples) {
  Graph tri = complete(3);
  for (int i = 1; i < 10; ++i) tri = disjoint_union(tri, complete(3));
  ReducedInstance ten = kernelize_k(tri, 0);
  EXPECT_EQ(ten.graph.vertex_count(), 0);
  EXPECT_EQ(ten.budget, 0);
  EXPECT_EQ(ten.verdict, Verdict::Undecided);
  EXPECT_EQ(ten.trace.size(), 10u);

  // Exhaustive application also removes d, which is isolated after the first step.
  ReducedInstance demo = kernelize_k(rule1_demo(), 1);
  EXPECT_EQ(demo.graph.vertex_count(), 0);
  EXPECT_EQ(demo.budget, 0);
  EXPECT_EQ(demo.verdict, Verdict::Undecided);
  ASSERT_EQ(demo.trace.size(), 2u);
  EXPECT_EQ(demo.trace[1].removed, (std::vector<int>{3}));

  ReducedInstance c4 = kernelize_k(cycle(4), 1);
  EXPECT_EQ(c4.graph, cycle(4));
  EXPECT_EQ(c4.verdict, Verdict::Undecided);
  EXPECT_EQ(min_weak(cycle(4)), 2);
}

TEST(KernelizeK, SizeBoundVerdict) {
  ReducedInstance r = kernelize_k(petersen(), 2);
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_EQ(r.reason, "size_bound");
  EXPECT_EQ(r.trace.back().rule, "size_bound");
}

TEST(KernelizeK, NeverSaysYes) {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 7, 0.4);
    for (int k = 0; k <= g.edge_count(); k += 3) EXPECT_NE(kernelize_k(g, k).verdict, Verdict::Yes);
  }
}

// Every labeled graph on at most five vertices, every k; plus random six.
TEST(KernelizeK, SafetyAndSizeBound) {
  auto check = [](const Graph& g) {
    int opt = min_weak(g);
    ReducedInstance base = kernelize_k(g, g.edge_count());
    int reduced_opt = min_weak(base.graph);
    ASSERT_EQ(opt, reduced_opt + base.k_decrease);
    for (int k = 0; k <= g.edge_count(); ++k) {
      ReducedInstance ri = kernelize_k(g, k);
      bool yes = opt <= k;
      if (ri.verdict == Verdict::No) {
        ASSERT_FALSE(yes) << ri.reason;
        continue;
      }
      ASSERT_EQ(yes, min_weak(ri.graph) <= ri.budget);
      if (yes) {
        ASSERT_LE(ri.graph.vertex_count(), 4 * ri.budget);
      }
      for (std::size_t i = 0; i < ri.vertex_map.size(); ++i)
        for (std::size_t j = i + 1; j < ri.vertex_map.size(); ++j)
          ASSERT_EQ(ri.graph.has_edge(i, j), g.has_edge(ri.vertex_map[i], ri.vertex_map[j]));
    }
  };
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) check(graph_of_mask(n, mask));
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 150; ++rep) check(random_graph(rng, 6, 0.5));
}

TEST(KernelizeK, LiftedLabelingIsOptimal) {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 7, 0.25 + 0.1 * (rep % 5));
    ReducedInstance ri = kernelize_k(g, g.edge_count());
    StcOptimum reduced = brute_stc_optimum(ri.graph, {30, 10});
    Labeling lifted = lift_rule1_labeling(g, ri, reduced.labeling);
    EXPECT_TRUE(is_stc_labeling(g, lifted));
    EXPECT_EQ(lifted.weak_count(), reduced.labeling.weak_count() + ri.k_decrease);
    EXPECT_EQ(lifted.strong_count(), brute_stc_optimum(g, {30, 10}).strong);
  }
}

TEST(WeakCut, Detection) {
  Graph g = disjoint_union(complete(3), complete(3));
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  pairs.emplace_back(2, 3);
  Graph bridged = Graph::from_edge_list(6, pairs);
  Labeling l = Labeling::all_strong(7);
  l.set_strong(6, false);
  EXPECT_TRUE(is_weak_cut(bridged, l, VertexSet(6, {0, 1, 2})));
  EXPECT_FALSE(is_weak_cut(bridged, l, VertexSet(6, {0, 1})));
}

// Removing the edges of a weak cut of an optimal labeling keeps the optimum.
TEST(WeakCut, DeletingCutOfOptimalLabelingKeepsOptimum) {
  std::mt19937_64 rng(45);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(rng, 6, 0.45);
    int n = g.vertex_count();
    int m = g.edge_count();
    int opt = stc_optimum_by_subsets(g);
    std::map<std::vector<int>, int> cache;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != opt) continue;
      std::vector<int> strong;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) strong.push_back(e);
      Labeling l = Labeling::from_strong(m, strong);
      if (!is_stc_labeling(g, l)) continue;
      for (std::uint32_t side = 1; side < (1u << (n - 1)); ++side) {
        VertexSet s(n);
        s.insert(0);
        for (int v = 1; v < n; ++v)
          if (side >> (v - 1) & 1) s.insert(v);
        if (!is_weak_cut(g, l, s)) continue;
        std::vector<int> cut;
        for (int e = 0; e < m; ++e)
          if (s.contains(g.edge(e).u) != s.contains(g.edge(e).v)) cut.push_back(e);
        auto [it, fresh] = cache.try_emplace(cut, 0);
        if (fresh) it->second = brute_stc_optimum(delete_edges(g, cut)).strong;
        ASSERT_EQ(it->second, opt);
      }
    }
  }
}

TEST(Rule2, Examples) {
  ReducedInstance one = rule2_apply(star(3), 1);
  EXPECT_EQ(one.verdict, Verdict::Yes);
  ASSERT_EQ(one.trace.size(), 1u);
  EXPECT_EQ(one.trace[0].rule, "matching");
  EXPECT_EQ(one.graph, star(3));

  ReducedInstance two = rule2_apply(star(3), 2);
  EXPECT_EQ(two.verdict, Verdict::Undecided);
  EXPECT_EQ(two.graph.vertex_count(), 3);
  EXPECT_EQ(two.graph.edge_count(), 2);
  EXPECT_EQ(two.budget, 2);
  EXPECT_EQ(two.k_decrease, 1);
  ASSERT_TRUE(two.partition.has_value());
  EXPECT_EQ(two.partition->matched, 2);
  EXPECT_EQ(two.partition->two_sided, 0);
  EXPECT_EQ(two.partition->one_sided, 1);
  ASSERT_EQ(two.trace.size(), 1u);
  EXPECT_EQ(two.trace[0].rule, "rule2");
  EXPECT_EQ(two.trace[0].removed, (std::vector<int>{3}));
  EXPECT_EQ(two.trace[0].budget_delta, 1);

  for (int ell = 2; ell <= 5; ++ell) {
    ReducedInstance k3 = rule2_apply(complete(3), ell);
    EXPECT_EQ(k3.graph, complete(3));
    EXPECT_EQ(k3.partition->two_sided, 1);
    EXPECT_EQ(k3.partition->one_sided, 0);
    EXPECT_TRUE(k3.trace.empty());
  }
}

TEST(Rule2, FamilyDeletesLargestIndices) {
  ReducedInstance r = rule2_apply(star(6), 3);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].removed, (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(r.trace[0].budget_delta, 4);
  EXPECT_EQ(r.vertex_map.size(), 3u);
}

TEST(Rule2, SizeBoundCheck) {
  EXPECT_TRUE(kernel_size_bound_check(ReducedInstance::identity(Graph::empty(0), 3), 3));
  EXPECT_TRUE(kernel_size_bound_check(ReducedInstance::identity(star(9), 2), 2));
  EXPECT_FALSE(kernel_size_bound_check(ReducedInstance::identity(star(9), 1), 1));
  EXPECT_EQ(rule2_apply(star(9), 1).verdict, Verdict::Yes);
  EXPECT_TRUE(kernel_size_bound_check(ReducedInstance::identity(star(13), 2), 2));
  EXPECT_FALSE(kernel_size_bound_check(ReducedInstance::identity(star(14), 2), 2));
}

TEST(Rule2, SafetyAndPartitionBounds) {
  auto check = [](const Graph& g) {
    int opt = stc_optimum_by_subsets(g);
    for (int ell = 0; ell <= g.edge_count() + 1; ++ell) {
      ReducedInstance ri = rule2_apply(g, ell);
      if (ri.verdict == Verdict::Yes) {
        ASSERT_GE(opt, ell);
        continue;
      }
      ASSERT_EQ(opt >= ell, stc_optimum_by_subsets(ri.graph) >= ell);
      ASSERT_EQ(ri.budget, ell);
      ASSERT_TRUE(ri.partition.has_value());
      const MatchingPartition& p = *ri.partition;
      ASSERT_LT(p.matched, 2 * ell);
      ASSERT_LE(p.two_sided, ell);
      ASSERT_LE(p.one_sided, ell * (1LL << ell));
      ASSERT_EQ(p.matched + p.two_sided + p.one_sided, ri.graph.vertex_count());
      ASSERT_TRUE(kernel_size_bound_check(ri, ell));
    }
  };
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) check(graph_of_mask(n, mask));
  std::mt19937_64 rng(46);
  for (int rep = 0; rep < 150; ++rep) check(random_graph(rng, 6, 0.2 + 0.1 * (rep % 4)));
}
