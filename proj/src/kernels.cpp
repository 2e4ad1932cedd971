#include "stc/kernels.h"

#include <algorithm>

namespace stc {

VertexSet CriticalCliqueDecomposition::neighborhood(int k) const {
  VertexSet out(static_cast<int>(clique_of.size()));
  for (int j : cc_adjacency[k]) out |= cliques[j];
  return out;
}

VertexSet CriticalCliqueDecomposition::second_neighborhood(int k) const {
  int n = static_cast<int>(clique_of.size());
  std::vector<bool> near(cliques.size(), false);
  near[k] = true;
  for (int j : cc_adjacency[k]) near[j] = true;
  VertexSet out(n);
  for (int j : cc_adjacency[k])
    for (int h : cc_adjacency[j])
      if (!near[h]) out |= cliques[h];
  return out;
}

CriticalCliqueDecomposition critical_cliques(const Graph& g) {
  int n = g.vertex_count();
  CriticalCliqueDecomposition d;
  d.clique_of.assign(n, -1);
  std::vector<VertexSet> closed_nb(n);
  for (int v = 0; v < n; ++v) {
    closed_nb[v] = g.neighbor_set(v);
    closed_nb[v].insert(v);
  }
  for (int v = 0; v < n; ++v) {
    if (d.clique_of[v] >= 0) continue;
    int id = d.size();
    VertexSet members(n);
    members.insert(v);
    d.clique_of[v] = id;
    for (int u : g.neighbors(v))
      if (u > v && d.clique_of[u] < 0 && closed_nb[u] == closed_nb[v]) {
        members.insert(u);
        d.clique_of[u] = id;
      }
    d.cliques.push_back(members);
  }
  d.cc_adjacency.resize(d.size());
  for (int k = 0; k < d.size(); ++k) {
    int rep = d.cliques[k].first();
    for (int u : g.neighbors(rep)) {
      int j = d.clique_of[u];
      if (j != k) d.cc_adjacency[k].push_back(j);
    }
    std::sort(d.cc_adjacency[k].begin(), d.cc_adjacency[k].end());
    d.cc_adjacency[k].erase(std::unique(d.cc_adjacency[k].begin(), d.cc_adjacency[k].end()), d.cc_adjacency[k].end());
  }
  d.closed.resize(d.size());
  for (int k = 0; k < d.size(); ++k) d.closed[k] = is_clique(g, d.neighborhood(k));
  return d;
}

int boundary_edge_count(const Graph& g, const CriticalCliqueDecomposition& d, int k) {
  VertexSet n1 = d.neighborhood(k);
  VertexSet n2 = d.second_neighborhood(k);
  int count = 0;
  n1.for_each([&](int v) { count += (g.neighbor_set(v) & n2).size(); });
  return count;
}

ReducedInstance ReducedInstance::identity(const Graph& g, long long budget) {
  ReducedInstance ri;
  ri.graph = g;
  ri.budget = budget;
  ri.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) ri.vertex_map[v] = v;
  return ri;
}

namespace {

void keep_vertices(ReducedInstance& ri, const VertexSet& keep) {
  InducedSubgraph sub = induced_subgraph(ri.graph, keep);
  std::vector<int> map(sub.to_original.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = ri.vertex_map[sub.to_original[i]];
  ri.graph = std::move(sub.graph);
  ri.vertex_map = std::move(map);
}

std::vector<int> original_indices(const ReducedInstance& ri, const VertexSet& s) {
  std::vector<int> out;
  s.for_each([&](int v) { out.push_back(ri.vertex_map[v]); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool rule1_apply_once(ReducedInstance& ri) {
  const Graph& g = ri.graph;
  CriticalCliqueDecomposition d = critical_cliques(g);
  for (int k = 0; k < d.size(); ++k) {
    if (!d.closed[k]) continue;
    int boundary = boundary_edge_count(g, d, k);
    if (d.cliques[k].size() <= boundary) continue;
    VertexSet removed = d.cliques[k] | d.neighborhood(k);
    ri.trace.push_back({"rule1", original_indices(ri, removed), boundary});
    ri.budget -= boundary;
    ri.k_decrease += boundary;
    keep_vertices(ri, VertexSet::full(g.vertex_count()) - removed);
    if (ri.budget < 0) {
      ri.verdict = Verdict::No;
      ri.reason = "budget";
      ri.trace.push_back({"budget", {}, 0});
    }
    return true;
  }
  return false;
}

std::optional<ReducedInstance> rule1_apply_once(const Graph& g, long long k) {
  ReducedInstance ri = ReducedInstance::identity(g, k);
  if (!rule1_apply_once(ri)) return std::nullopt;
  return ri;
}

ReducedInstance kernelize_k(const Graph& g, long long k) {
  ReducedInstance ri = ReducedInstance::identity(g, k);
  while (ri.verdict == Verdict::Undecided && rule1_apply_once(ri)) {
  }
  if (ri.verdict == Verdict::Undecided && ri.graph.vertex_count() > 4 * ri.budget) {
    ri.verdict = Verdict::No;
    ri.reason = "size_bound";
    ri.trace.push_back({"size_bound", {}, 0});
  }
  return ri;
}

ReducedInstance rule2_apply(const Graph& g, long long ell) {
  ReducedInstance ri = ReducedInstance::identity(g, ell);
  int n = g.vertex_count();
  Matching m = maximum_matching(g);
  if (m.size() >= ell) {
    ri.verdict = Verdict::Yes;
    ri.reason = "matching";
    ri.trace.push_back({"matching", {}, 0});
    return ri;
  }
  VertexSet matched(n);
  for (int e : m.edges) {
    matched.insert(g.edge(e).u);
    matched.insert(g.edge(e).v);
  }
  std::vector<int> one_sided;
  int two_sided = 0;
  for (int v = 0; v < n; ++v) {
    if (matched.contains(v)) continue;
    bool both = false;
    for (int e : m.edges)
      if (g.has_edge(v, g.edge(e).u) && g.has_edge(v, g.edge(e).v)) {
        both = true;
        break;
      }
    if (both)
      ++two_sided;
    else
      one_sided.push_back(v);
  }

  VertexSet removed(n);
  std::vector<bool> grouped(n, false);
  for (std::size_t i = 0; i < one_sided.size(); ++i) {
    int v = one_sided[i];
    if (grouped[v]) continue;
    std::vector<int> family{v};
    for (std::size_t j = i + 1; j < one_sided.size(); ++j)
      if (!grouped[one_sided[j]] && g.neighbor_set(one_sided[j]) == g.neighbor_set(v)) family.push_back(one_sided[j]);
    for (int u : family) grouped[u] = true;
    int f = static_cast<int>(family.size());
    int nf = g.degree(v);
    if (f <= nf) continue;
    std::vector<int> gone(family.end() - (f - nf), family.end());
    for (int u : gone) removed.insert(u);
    long long delta = static_cast<long long>(f - nf) * nf;
    ri.k_decrease += delta;
    ri.trace.push_back({"rule2", gone, delta});
  }
  ri.partition = MatchingPartition{matched.size(), two_sided, static_cast<int>(one_sided.size()) - removed.size()};
  if (!removed.empty()) keep_vertices(ri, VertexSet::full(n) - removed);
  return ri;
}

bool kernel_size_bound_check(const ReducedInstance& ri, long long ell) {
  if (ell < 0) return false;
  if (ell >= 58) return true;
  long long bound = 3 * ell + ell * (1LL << ell);
  return ri.graph.vertex_count() <= bound;
}

bool is_weak_cut(const Graph& g, const Labeling& l, const VertexSet& side) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v) && l.is_strong(e)) return false;
  return true;
}

Labeling lift_rule1_labeling(const Graph& original, const ReducedInstance& ri, const Labeling& reduced) {
  int n = original.vertex_count();
  std::vector<int> to_reduced(n, -1);
  for (std::size_t i = 0; i < ri.vertex_map.size(); ++i) to_reduced[ri.vertex_map[i]] = static_cast<int>(i);
  std::vector<int> group(n, -1);
  int id = 0;
  for (const TraceEntry& t : ri.trace) {
    if (t.rule != "rule1") continue;
    for (int v : t.removed) group[v] = id;
    ++id;
  }
  Labeling out = Labeling::all_weak(original.edge_count());
  for (int e = 0; e < original.edge_count(); ++e) {
    const Edge& ed = original.edge(e);
    int ru = to_reduced[ed.u];
    int rv = to_reduced[ed.v];
    if (ru >= 0 && rv >= 0)
      out.set_strong(e, reduced.is_strong(*ri.graph.edge_index(ru, rv)));
    else if (group[ed.u] >= 0 && group[ed.u] == group[ed.v])
      out.set_strong(e, true);
  }
  return out;
}

}  // namespace stc
