#include "stc/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "stc/errors.h"

namespace stc {

namespace {

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw InputError("negative vertex count " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  g.incident_.resize(n);
  g.rows_.assign(n, VertexSet(n));
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw InputError("vertex out of range in pair " + pair_text(a, b));
    if (a == b) throw InputError("self-loop " + pair_text(a, b));
    if (g.rows_[a].contains(b)) throw InputError("duplicate edge " + pair_text(a, b));
    g.rows_[a].insert(b);
    g.rows_[b].insert(a);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    adj[g.edges_[i].u].emplace_back(g.edges_[i].v, i);
    adj[g.edges_[i].v].emplace_back(g.edges_[i].u, i);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    for (auto [w, e] : adj[v]) {
      g.adjacency_[v].push_back(w);
      g.incident_[v].push_back(e);
    }
  }
  return g;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v)) return std::nullopt;
  const auto& nb = adjacency_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  return incident_[u][it - nb.begin()];
}

std::vector<Conflict> enumerate_p3(const Graph& g) {
  std::vector<Conflict> out;
  for (int c = 0; c < g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    const auto& inc = g.incident_edges(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) out.push_back({std::min(inc[i], inc[j]), std::max(inc[i], inc[j])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  std::vector<int> relabel(g.vertex_count(), -1);
  s.for_each([&](int v) {
    relabel[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  });
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges())
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) pairs.emplace_back(relabel[e.u], relabel[e.v]);
  out.graph = Graph::from_edge_list(static_cast<int>(out.to_original.size()), pairs);
  return out;
}

Matching maximal_matching(const Graph& g) {
  Matching m;
  m.kind = MatchingKind::Maximal;
  std::vector<bool> used(g.vertex_count(), false);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      m.edges.push_back(i);
    }
  }
  return m;
}

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = parent_[u];
        int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  std::vector<int> mate = Blossom(g).run();
  Matching m;
  m.kind = MatchingKind::Maximum;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) m.edges.push_back(*g.edge_index(v, mate[v]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbor_set(v))) ok = false;
  });
  return ok;
}

bool is_matching(const Graph& g, const std::vector<int>& edges) {
  std::vector<bool> used(g.vertex_count(), false);
  for (int i : edges) {
    if (i < 0 || i >= g.edge_count()) return false;
    const Edge& e = g.edge(i);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
  return Graph::from_edge_list(g.vertex_count(), pairs);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp(g.vertex_count());
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> edges_within(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (s.contains(g.edge(i).u) && s.contains(g.edge(i).v)) out.push_back(i);
  return out;
}

}  // namespace stc
