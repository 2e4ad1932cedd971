#include "stc/labeling.h"

#include <algorithm>
#include <string>

#include "stc/errors.h"

namespace stc {

Labeling Labeling::all_strong(int edge_count) {
  Labeling l(edge_count);
  std::fill(l.strong_.begin(), l.strong_.end(), true);
  return l;
}

Labeling Labeling::from_strong(int edge_count, const std::vector<int>& strong) {
  Labeling l(edge_count);
  for (int e : strong) {
    if (e < 0 || e >= edge_count) throw ContractError("strong edge index " + std::to_string(e) + " out of range");
    l.strong_[e] = true;
  }
  return l;
}

Labeling Labeling::from_partition(int edge_count, const std::vector<int>& strong, const std::vector<int>& weak) {
  std::vector<int> seen(edge_count, 0);
  for (const auto* part : {&strong, &weak})
    for (int e : *part) {
      if (e < 0 || e >= edge_count) throw ContractError("edge index " + std::to_string(e) + " out of range");
      if (seen[e]++) throw ContractError("edge " + std::to_string(e) + " listed twice");
    }
  for (int e = 0; e < edge_count; ++e)
    if (!seen[e]) throw ContractError("edge " + std::to_string(e) + " missing from labeling");
  return from_strong(edge_count, strong);
}

std::vector<int> Labeling::strong_edges() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (strong_[e]) out.push_back(e);
  return out;
}

std::vector<int> Labeling::weak_edges() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (!strong_[e]) out.push_back(e);
  return out;
}

int Labeling::strong_count() const { return static_cast<int>(std::count(strong_.begin(), strong_.end(), true)); }

std::vector<StcViolation> stc_violations(const Graph& g, const Labeling& l, bool all) {
  if (l.edge_count() != g.edge_count())
    throw ContractError("labeling covers " + std::to_string(l.edge_count()) + " edges, graph has " +
                        std::to_string(g.edge_count()));
  std::vector<StcViolation> out;
  for (const Conflict& c : enumerate_p3(g)) {
    if (!l.is_strong(c.first) || !l.is_strong(c.second)) continue;
    const Edge& e1 = g.edge(c.first);
    const Edge& e2 = g.edge(c.second);
    int center = e2.has(e1.u) ? e1.u : e1.v;
    out.push_back({c.first, c.second, e1.other(center), center, e2.other(center)});
    if (!all) break;
  }
  return out;
}

bool is_stc_labeling(const Graph& g, const Labeling& l) { return stc_violations(g, l).empty(); }

bool is_cluster_graph(const Graph& g) {
  for (int c = 0; c < g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) return false;
  }
  return true;
}

Graph delete_edges(const Graph& g, const std::vector<int>& deleted) {
  std::vector<bool> gone(g.edge_count(), false);
  for (int e : deleted) {
    if (e < 0 || e >= g.edge_count()) throw ContractError("deleted edge index " + std::to_string(e) + " out of range");
    gone[e] = true;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!gone[e]) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  return Graph::from_edge_list(g.vertex_count(), pairs);
}

Labeling cluster_labeling(const Graph& g, const DeletionSet& d) {
  Graph residual = delete_edges(g, d.deleted);
  auto p3 = enumerate_p3(residual);
  if (!p3.empty()) {
    const Edge& e1 = residual.edge(p3.front().first);
    const Edge& e2 = residual.edge(p3.front().second);
    int center = e2.has(e1.u) ? e1.u : e1.v;
    throw PreconditionError("deleting the given edges does not leave a cluster graph",
                            {e1.other(center), center, e2.other(center)});
  }
  Labeling l = Labeling::all_strong(g.edge_count());
  for (int e : d.deleted) l.set_strong(e, false);
  return l;
}

bool is_cluster_labeling(const Graph& g, const Labeling& l) {
  if (l.edge_count() != g.edge_count()) return false;
  return is_cluster_graph(delete_edges(g, l.weak_edges()));
}

}  // namespace stc
