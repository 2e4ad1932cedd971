#include "stc/gallai.h"

#include <algorithm>
#include <chrono>

#include "stc/errors.h"
#include "stc/kernels.h"

namespace stc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: break;
  }
  return "undecided";
}

ConflictGraph gallai_graph(const Graph& g) {
  ConflictGraph cg;
  cg.node_count = g.edge_count();
  cg.adjacency.assign(cg.node_count, VertexSet(cg.node_count));
  cg.conflicts = enumerate_p3(g);
  for (const Conflict& c : cg.conflicts) {
    cg.adjacency[c.first].insert(c.second);
    cg.adjacency[c.second].insert(c.first);
  }
  cg.host = g;
  return cg;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const std::vector<VertexSet>& adj, std::uint64_t* nodes) : adj_(adj), nodes_(nodes) {}

  // True iff G[live] has a vertex cover of size <= budget.
  bool feasible(VertexSet live, int budget) {
    if (nodes_) ++*nodes_;
    for (bool changed = true; changed;) {
      changed = false;
      bool stop = false;
      live.for_each([&](int v) {
        if (stop || !live.contains(v)) return;
        VertexSet nb = adj_[v] & live;
        int d = nb.size();
        if (d == 0) {
          live.erase(v);
        } else if (d == 1) {
          live.erase(nb.first());
          live.erase(v);
          if (--budget < 0) stop = true;
          changed = true;
        }
      });
      if (stop) return false;
    }
    int edges2 = 0;
    int best = -1;
    int best_degree = 0;
    live.for_each([&](int v) {
      int d = (adj_[v] & live).size();
      edges2 += d;
      if (d > best_degree) {
        best_degree = d;
        best = v;
      }
    });
    if (best < 0) return true;
    if (budget <= 0) return false;
    if (edges2 / 2 > budget * best_degree) return false;
    VertexSet without = live;
    without.erase(best);
    if (feasible(without, budget - 1)) return true;
    VertexSet nb = adj_[best] & live;
    int d = nb.size();
    if (d > budget) return false;
    return feasible(without - nb, budget - d);
  }

 private:
  const std::vector<VertexSet>& adj_;
  std::uint64_t* nodes_;
};

int matching_lower_bound(const std::vector<VertexSet>& adj, const VertexSet& live) {
  VertexSet free = live;
  int size = 0;
  live.for_each([&](int v) {
    if (!free.contains(v)) return;
    int u = (adj[v] & free).first();
    if (u < 0) return;
    free.erase(u);
    free.erase(v);
    ++size;
  });
  return size;
}

}  // namespace

std::optional<std::vector<int>> min_vertex_cover(const ConflictGraph& cg, int budget, std::uint64_t* nodes) {
  if (budget < 0) return std::nullopt;
  CoverSearch search(cg.adjacency, nodes);
  VertexSet live = VertexSet::full(cg.node_count);
  int size = matching_lower_bound(cg.adjacency, live);
  if (size > budget) return std::nullopt;
  while (!search.feasible(live, size))
    if (++size > budget) return std::nullopt;

  std::vector<int> cover;
  int remaining = size;
  for (int i = 0; i < cg.node_count && remaining > 0; ++i) {
    if (!live.contains(i)) continue;
    VertexSet without = live;
    without.erase(i);
    if (search.feasible(without, remaining - 1)) {
      cover.push_back(i);
      live = without;
      --remaining;
    } else {
      VertexSet nb = cg.adjacency[i] & live;
      nb.for_each([&](int u) { cover.push_back(u); });
      remaining -= nb.size();
      live = without - nb;
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

SolveResult solve_stc_k(const Graph& g, int k, const StcKOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver = options.kernelize ? "gallai-vc+rule1" : "gallai-vc";
  auto finish = [&]() -> SolveResult& {
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  };
  if (k < 0) throw ContractError("budget k must be non-negative");

  ReducedInstance ri = options.kernelize ? kernelize_k(g, k) : ReducedInstance::identity(g, k);
  res.trace = ri.trace;
  res.stats.rules_fired = static_cast<int>(std::count_if(ri.trace.begin(), ri.trace.end(),
                                                         [](const TraceEntry& t) { return t.rule == "rule1"; }));
  if (ri.verdict == Verdict::No) return finish();

  ConflictGraph cg = gallai_graph(ri.graph);
  auto cover = min_vertex_cover(cg, static_cast<int>(ri.budget), &res.stats.nodes);
  if (!cover) return finish();

  Labeling reduced = Labeling::all_strong(ri.graph.edge_count());
  for (int e : *cover) reduced.set_strong(e, false);
  Labeling full = lift_rule1_labeling(g, ri, reduced);
  if (full.weak_count() != static_cast<int>(cover->size()) + ri.k_decrease)
    throw ContractError("lifted labeling does not match the kernel budget");
  res.feasible = true;
  res.strong = full.strong_count();
  res.weak = full.weak_count();
  res.certificate = std::move(full);
  return finish();
}

SolveResult solve_stc_min_weak(const Graph& g, const StcKOptions& options) {
  std::uint64_t nodes = 0;
  double ms = 0.0;
  for (int k = 0;; ++k) {
    SolveResult r = solve_stc_k(g, k, options);
    nodes += r.stats.nodes;
    ms += r.stats.wall_ms;
    if (r.feasible) {
      r.stats.nodes = nodes;
      r.stats.wall_ms = ms;
      return r;
    }
  }
}

}  // namespace stc
