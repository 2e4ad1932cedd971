#include "support.h"

#include <algorithm>
#include <bit>

namespace stc::test {

Graph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, pairs);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, pairs);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, pairs);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, pairs);
}

Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, pairs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> pairs;
  int shift = a.vertex_count();
  for (const Edge& e : a.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edge_list(shift + b.vertex_count(), pairs);
}

Graph rule1_demo() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, pairs);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = g.edge_count() - 1; i >= 0; --i) pairs.emplace_back(perm[g.edge(i).u], perm[g.edge(i).v]);
  return Graph::from_edge_list(g.vertex_count(), pairs);
}

int p3_count_by_triples(const Graph& g) {
  int n = g.vertex_count();
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int edges = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
        if (edges == 2) ++count;
      }
  return count;
}

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool small_isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         degree_sequence(a) == degree_sequence(b);
}

bool contains_induced_by_degrees(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  int k = h.vertex_count();
  if (k > n) return false;
  std::vector<int> target = degree_sequence(h);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    std::vector<int> d;
    int edges = 0;
    for (int u : members) {
      int deg = 0;
      for (int v : members) deg += g.has_edge(u, v);
      d.push_back(deg);
      edges += deg;
    }
    std::sort(d.begin(), d.end());
    if (edges / 2 == h.edge_count() && d == target) return true;
  }
  return false;
}

int matching_number_brute(const Graph& g) {
  int m = g.edge_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<bool> used(g.vertex_count(), false);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      const Edge& x = g.edge(e);
      if (used[x.u] || used[x.v]) ok = false;
      used[x.u] = used[x.v] = true;
    }
    if (ok) best = size;
  }
  return best;
}

int clique_number_brute(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

int stc_optimum_by_subsets(const Graph& g) {
  int m = g.edge_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      for (int f = e + 1; f < m && ok; ++f) {
        if (!(mask >> f & 1)) continue;
        const Edge& x = g.edge(e);
        const Edge& y = g.edge(f);
        int a = -1, b = -1;
        if (x.u == y.u) a = x.v, b = y.v;
        else if (x.u == y.v) a = x.v, b = y.u;
        else if (x.v == y.u) a = x.u, b = y.v;
        else if (x.v == y.v) a = x.u, b = y.u;
        if (a >= 0 && !g.has_edge(a, b)) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

int cd_optimum_by_subsets(const Graph& g) {
  int m = g.edge_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) kept.emplace_back(g.edge(e).u, g.edge(e).v);
    Graph h = Graph::from_edge_list(g.vertex_count(), kept);
    if (p3_count_by_triples(h) == 0) best = size;
  }
  return best;
}

}  // namespace stc::test
