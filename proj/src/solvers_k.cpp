#include "stc/solvers_k.h"

#include <algorithm>
#include <chrono>

#include "stc/errors.h"
#include "stc/labeling.h"

namespace stc {

namespace {

struct P3 {
  int a = -1;  // smaller edge index
  int b = -1;
};

class CdSearch {
 public:
  explicit CdSearch(const Graph& g) : g_(g), rows_(g.vertex_count()), alive_(g.edge_count(), true),
                                      fixed_(g.edge_count(), false) {
    for (int v = 0; v < g.vertex_count(); ++v) rows_[v] = g.neighbor_set(v);
  }

  bool run(int budget) {
    ++nodes;
    VertexSet active = non_clique_vertices();
    P3 p = lowest_p3(active);
    if (p.a < 0) return true;
    if (budget == 0 || packing_bound(active) > budget) return false;
    if (fixed_[p.a] && fixed_[p.b]) return false;
    if (!fixed_[p.a]) {
      remove(p.a);
      deleted.push_back(p.a);
      if (run(budget - 1)) return true;
      deleted.pop_back();
      restore(p.a);
    }
    if (!fixed_[p.b]) {
      bool was = fixed_[p.a];
      fixed_[p.a] = true;
      remove(p.b);
      deleted.push_back(p.b);
      if (run(budget - 1)) return true;
      deleted.pop_back();
      restore(p.b);
      fixed_[p.a] = was;
    }
    return false;
  }

  std::vector<int> deleted;
  std::uint64_t nodes = 0;

 private:
  void remove(int e) {
    alive_[e] = false;
    rows_[g_.edge(e).u].erase(g_.edge(e).v);
    rows_[g_.edge(e).v].erase(g_.edge(e).u);
  }
  void restore(int e) {
    alive_[e] = true;
    rows_[g_.edge(e).u].insert(g_.edge(e).v);
    rows_[g_.edge(e).v].insert(g_.edge(e).u);
  }

  // Vertices of components of the current graph that are not cliques.
  VertexSet non_clique_vertices() const {
    int n = g_.vertex_count();
    VertexSet seen(n), out(n);
    for (int s = 0; s < n; ++s) {
      if (seen.contains(s)) continue;
      VertexSet comp(n), frontier(n);
      comp.insert(s);
      frontier.insert(s);
      while (!frontier.empty()) {
        VertexSet next(n);
        frontier.for_each([&](int v) { next |= rows_[v]; });
        next -= comp;
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      int size = comp.size();
      bool clique = true;
      comp.for_each([&](int v) {
        if (clique && rows_[v].size() != size - 1) clique = false;
      });
      if (!clique) out |= comp;
    }
    return out;
  }

  P3 lowest_p3(const VertexSet& active) const {
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (!alive_[e]) continue;
      const Edge& ed = g_.edge(e);
      if (!active.contains(ed.u)) continue;
      int best = -1;
      for (int c : {ed.u, ed.v}) {
        int far = ed.other(c);
        const auto& nb = g_.neighbors(c);
        const auto& inc = g_.incident_edges(c);
        for (std::size_t j = 0; j < nb.size(); ++j) {
          int f = inc[j];
          if (f <= e || !alive_[f] || nb[j] == far || rows_[far].contains(nb[j])) continue;
          if (best < 0 || f < best) best = f;
        }
      }
      if (best >= 0) return {e, best};
    }
    return {};
  }

  // Size of a greedy family of edge-disjoint induced P3s.
  int packing_bound(const VertexSet& active) const {
    std::vector<bool> used(g_.edge_count(), false);
    int count = 0;
    active.for_each([&](int c) {
      const auto& nb = g_.neighbors(c);
      const auto& inc = g_.incident_edges(c);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (!alive_[inc[i]] || used[inc[i]]) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!alive_[inc[j]] || used[inc[j]] || rows_[nb[i]].contains(nb[j])) continue;
          used[inc[i]] = used[inc[j]] = true;
          ++count;
          break;
        }
      }
    });
    return count;
  }

  const Graph& g_;
  std::vector<VertexSet> rows_;
  std::vector<bool> alive_;
  std::vector<bool> fixed_;
};

}  // namespace

SolveResult solve_cd_k(const Graph& g, int k) {
  if (k < 0) throw ContractError("budget k must be non-negative");
  auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver = "cd-branch";
  CdSearch search(g);
  for (int budget = 0; budget <= k; ++budget) {
    if (search.run(budget)) {
      res.feasible = true;
      break;
    }
  }
  res.stats.nodes = search.nodes;
  if (res.feasible) {
    std::vector<int> d = search.deleted;
    std::sort(d.begin(), d.end());
    res.certificate = cluster_labeling(g, DeletionSet{d});
    res.weak = static_cast<int>(d.size());
    res.strong = g.edge_count() - res.weak;
  }
  res.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SolveResult solve_cd_min_deletions(const Graph& g) { return solve_cd_k(g, g.edge_count()); }

}  // namespace stc
