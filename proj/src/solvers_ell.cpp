#include "stc/solvers_ell.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "stc/errors.h"
#include "stc/labeling.h"

namespace stc {

namespace {

using Mask = std::uint32_t;

int pairs(int s) { return s * (s - 1) / 2; }

// Cover vertices as bits plus the bitmask views every table needs.
struct CoverContext {
  std::vector<int> cover;
  std::vector<int> independent;
  std::vector<int> bit_of;          // vertex -> bit, -1 outside C
  std::vector<Mask> cover_adj;      // bit -> neighbors in C
  std::vector<Mask> independent_nb; // I position -> N(i) ∩ C
  std::vector<bool> clique;         // mask -> is a clique

  CoverContext(const Graph& g, const VertexSet& c) : bit_of(g.vertex_count(), -1) {
    cover = c.to_vector();
    int size = static_cast<int>(cover.size());
    if (size > kMaxCoverVertices)
      throw ResourceLimitError("cover has " + std::to_string(size) + " vertices, limit is " +
                               std::to_string(kMaxCoverVertices) + "; parameter too large for exact subset tables");
    for (int j = 0; j < size; ++j) bit_of[cover[j]] = j;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (bit_of[v] < 0) independent.push_back(v);
    std::uint64_t cells = (static_cast<std::uint64_t>(independent.size()) + 1) << size;
    if (cells > (std::uint64_t{1} << 28))
      throw ResourceLimitError("subset table of " + std::to_string(cells) + " entries exceeds the memory limit");
    cover_adj.assign(size, 0);
    for (int j = 0; j < size; ++j)
      for (int u : g.neighbors(cover[j]))
        if (bit_of[u] >= 0) cover_adj[j] |= Mask{1} << bit_of[u];
    for (int v : independent) {
      Mask m = 0;
      for (int u : g.neighbors(v))
        if (bit_of[u] >= 0) m |= Mask{1} << bit_of[u];
      independent_nb.push_back(m);
    }
    clique.assign(std::size_t{1} << size, false);
    clique[0] = true;
    for (Mask m = 1; m < (Mask{1} << size); ++m) {
      int low = std::countr_zero(m);
      Mask rest = m & (m - 1);
      clique[m] = clique[rest] && (cover_adj[low] & rest) == rest;
    }
  }

  int size() const { return static_cast<int>(cover.size()); }
  Mask full() const { return (Mask{1} << cover.size()) - 1; }

  VertexSet to_set(Mask m, int universe) const {
    VertexSet s(universe);
    for (int j = 0; j < size(); ++j)
      if (m >> j & 1) s.insert(cover[j]);
    return s;
  }
};

std::vector<int> cd_base_row(const CoverContext& ctx) {
  std::vector<int> row(std::size_t{1} << ctx.size(), 0);
  for (Mask m = 1; m <= ctx.full() && ctx.size() > 0; ++m) {
    Mask low = m & -m;
    Mask rest = m ^ low;
    int best = 0;
    for (Mask s = rest;; s = (s - 1) & rest) {
      Mask part = s | low;
      if (ctx.clique[part]) best = std::max(best, row[m ^ part] + pairs(std::popcount(part)));
      if (s == 0) break;
    }
    row[m] = best;
  }
  return row;
}

DpTable cd_table(const CoverContext& ctx) {
  DpTable t;
  t.cover = ctx.cover;
  t.independent = ctx.independent;
  t.entries.push_back(cd_base_row(ctx));
  for (std::size_t i = 0; i < ctx.independent.size(); ++i) {
    const auto& prev = t.entries.back();
    std::vector<int> row(prev.size(), 0);
    Mask nb = ctx.independent_nb[i];
    for (Mask m = 0; m < prev.size(); ++m) {
      Mask avail = m & nb;
      int best = prev[m];
      for (Mask s = avail; s; s = (s - 1) & avail)
        if (ctx.clique[s]) best = std::max(best, prev[m ^ s] + pairs(std::popcount(s) + 1));
      row[m] = best;
    }
    t.entries.push_back(std::move(row));
  }
  return t;
}

// Strong neighbors inside C of each cover bit under S_C.
std::vector<Mask> strong_masks(const Graph& g, const CoverContext& ctx, const std::vector<int>& strong) {
  std::vector<Mask> out(ctx.size(), 0);
  for (int e : strong) {
    int a = ctx.bit_of[g.edge(e).u];
    int b = ctx.bit_of[g.edge(e).v];
    if (a < 0 || b < 0) throw ContractError("strong edge " + std::to_string(e) + " is not inside the cover");
    out[a] |= Mask{1} << b;
    out[b] |= Mask{1} << a;
  }
  return out;
}

// Cover bits of N(i) whose strong neighbors all lie in N(i).
Mask usable_bits(const CoverContext& ctx, const std::vector<Mask>& strong, std::size_t pos) {
  Mask nb = ctx.independent_nb[pos];
  Mask good = 0;
  for (int j = 0; j < ctx.size(); ++j)
    if ((nb >> j & 1) && (strong[j] & ~nb) == 0) good |= Mask{1} << j;
  return good;
}

std::vector<Mask> valid_masks(const CoverContext& ctx, Mask good) {
  std::vector<Mask> out;
  for (Mask s = good;; s = (s - 1) & good) {
    if (ctx.clique[s]) out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

DpTable stc_table(const Graph& g, const CoverContext& ctx, const std::vector<int>& strong) {
  std::vector<Mask> sm = strong_masks(g, ctx, strong);
  DpTable t;
  t.cover = ctx.cover;
  t.independent = ctx.independent;
  t.entries.emplace_back(std::size_t{1} << ctx.size(), static_cast<int>(strong.size()));
  for (std::size_t i = 0; i < ctx.independent.size(); ++i) {
    const auto& prev = t.entries.back();
    std::vector<Mask> valid = valid_masks(ctx, usable_bits(ctx, sm, i));
    std::vector<int> row(prev.size(), 0);
    for (Mask m = 0; m < prev.size(); ++m) {
      int best = prev[m];
      for (Mask s : valid)
        if ((s & m) == s) best = std::max(best, prev[m ^ s] + std::popcount(s));
      row[m] = best;
    }
    t.entries.push_back(std::move(row));
  }
  return t;
}

// Maximum independent set size of the conflict graph induced on live.
int max_independent(const std::vector<VertexSet>& adj, VertexSet live) {
  int taken = 0;
  for (bool changed = true; changed;) {
    changed = false;
    live.for_each([&](int v) {
      if (!live.contains(v)) return;
      VertexSet nb = adj[v] & live;
      if (nb.size() <= 1) {
        live -= nb;
        live.erase(v);
        ++taken;
        changed = true;
      }
    });
  }
  int best = -1, best_degree = 0;
  live.for_each([&](int v) {
    int d = (adj[v] & live).size();
    if (d > best_degree) {
      best_degree = d;
      best = v;
    }
  });
  if (best < 0) return taken;
  VertexSet without = live;
  without.erase(best);
  int skip = max_independent(adj, without);
  int take = 1 + max_independent(adj, without - adj[best]);
  return taken + std::max(skip, take);
}

class StcEllSearch {
 public:
  StcEllSearch(const Graph& g, const CoverContext& ctx, int ell) : g_(g), ctx_(ctx), ell_(ell) {
    VertexSet c(g.vertex_count());
    for (int v : ctx.cover) c.insert(v);
    inside_ = edges_within(g, c);
    int m = static_cast<int>(inside_.size());
    conflict_.assign(m, VertexSet(m));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const Edge& x = g.edge(inside_[a]);
        const Edge& y = g.edge(inside_[b]);
        int shared = x.has(y.u) ? y.u : (x.has(y.v) ? y.v : -1);
        if (shared < 0) continue;
        if (!g.has_edge(x.other(shared), y.other(shared))) {
          conflict_[a].insert(b);
          conflict_[b].insert(a);
        }
      }
  }

  bool run() {
    VertexSet chosen(static_cast<int>(inside_.size()));
    return dfs(0, chosen);
  }

  std::vector<int> strong;  // S_C of the success, host edge indices
  DpTable table;
  std::uint64_t nodes = 0;

 private:
  bool dfs(int start, VertexSet& chosen) {
    ++nodes;
    std::vector<int> current;
    chosen.for_each([&](int a) { current.push_back(inside_[a]); });
    DpTable t = stc_table(g_, ctx_, current);
    int value = t.answer();
    if (value >= ell_) {
      strong = current;
      table = std::move(t);
      return true;
    }
    int m = static_cast<int>(inside_.size());
    VertexSet open(m);
    VertexSet blocked(m);
    chosen.for_each([&](int a) { blocked |= conflict_[a]; });
    for (int a = start; a < m; ++a)
      if (!blocked.contains(a)) open.insert(a);
    int count = open.size();
    if (value + count < ell_) return false;
    if (value + max_independent(conflict_, open) < ell_) return false;
    std::vector<int> order = open.to_vector();
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (value + static_cast<int>(order.size() - p) < ell_) break;
      chosen.insert(order[p]);
      bool ok = dfs(order[p] + 1, chosen);
      chosen.erase(order[p]);
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  const CoverContext& ctx_;
  int ell_;
  std::vector<int> inside_;
  std::vector<VertexSet> conflict_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

SolveResult matching_yes(const Graph& g, const Matching& m, const char* solver) {
  SolveResult res;
  res.feasible = true;
  res.solver = solver;
  res.certificate = Labeling::from_strong(g.edge_count(), m.edges);
  res.strong = m.size();
  res.weak = g.edge_count() - m.size();
  return res;
}

}  // namespace

VertexSet matching_cover(const Graph& g) {
  VertexSet c(g.vertex_count());
  for (int e : maximal_matching(g).edges) {
    c.insert(g.edge(e).u);
    c.insert(g.edge(e).v);
  }
  return c;
}

DpTable build_cd_table(const Graph& g, const VertexSet& cover) { return cd_table(CoverContext(g, cover)); }

std::vector<VertexSet> valid_strong_neighbor_sets(const Graph& g, const VertexSet& cover, const PartialLabeling& s,
                                                  int i) {
  CoverContext ctx(g, cover);
  auto pos = std::find(ctx.independent.begin(), ctx.independent.end(), i);
  if (pos == ctx.independent.end()) throw ContractError("vertex " + std::to_string(i) + " lies in the cover");
  std::vector<Mask> sm = strong_masks(g, ctx, s.strong_in_cover);
  std::vector<VertexSet> out;
  for (Mask m : valid_masks(ctx, usable_bits(ctx, sm, pos - ctx.independent.begin())))
    out.push_back(ctx.to_set(m, g.vertex_count()));
  return out;
}

DpTable build_stc_table(const Graph& g, const VertexSet& cover, const PartialLabeling& s) {
  return stc_table(g, CoverContext(g, cover), s.strong_in_cover);
}

SolveResult solve_cd_ell(const Graph& g, int ell) {
  if (ell < 0) throw ContractError("target ell must be non-negative");
  auto start = std::chrono::steady_clock::now();
  Matching m = maximal_matching(g);
  if (m.size() >= ell) {
    SolveResult res = matching_yes(g, m, "cd-subset-dp");
    res.stats.wall_ms = elapsed_ms(start);
    return res;
  }
  SolveResult res;
  res.solver = "cd-subset-dp";
  CoverContext ctx(g, matching_cover(g));
  DpTable t = cd_table(ctx);
  res.stats.nodes = t.entries.size() << ctx.size();
  if (t.answer() >= ell) {
    int n = g.vertex_count();
    std::vector<int> cluster_of(n, -1);
    int next = 0;
    Mask mask = ctx.full();
    for (std::size_t i = ctx.independent.size(); i > 0; --i) {
      const auto& prev = t.entries[i - 1];
      int target = t.entries[i][mask];
      Mask avail = mask & ctx.independent_nb[i - 1];
      Mask pick = 0;
      bool found = prev[mask] == target;
      for (Mask s = avail; !found && s; s = (s - 1) & avail)
        if (ctx.clique[s] && prev[mask ^ s] + pairs(std::popcount(s) + 1) == target) {
          pick = s;
          found = true;
        }
      cluster_of[ctx.independent[i - 1]] = next;
      for (int j = 0; j < ctx.size(); ++j)
        if (pick >> j & 1) cluster_of[ctx.cover[j]] = next;
      ++next;
      mask ^= pick;
    }
    const auto& base = t.entries[0];
    while (mask) {
      Mask low = mask & -mask;
      Mask rest = mask ^ low;
      for (Mask s = rest;; s = (s - 1) & rest) {
        Mask part = s | low;
        if (ctx.clique[part] && base[mask ^ part] + pairs(std::popcount(part)) == base[mask]) {
          for (int j = 0; j < ctx.size(); ++j)
            if (part >> j & 1) cluster_of[ctx.cover[j]] = next;
          ++next;
          mask ^= part;
          break;
        }
        if (s == 0) break;
      }
    }
    std::vector<int> strong;
    for (int e = 0; e < g.edge_count(); ++e)
      if (cluster_of[g.edge(e).u] == cluster_of[g.edge(e).v]) strong.push_back(e);
    res.feasible = true;
    res.certificate = Labeling::from_strong(g.edge_count(), strong);
    res.strong = static_cast<int>(strong.size());
    res.weak = g.edge_count() - res.strong;
  }
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

SolveResult solve_stc_ell(const Graph& g, int ell) {
  if (ell < 0) throw ContractError("target ell must be non-negative");
  auto start = std::chrono::steady_clock::now();
  Matching m = maximal_matching(g);
  if (m.size() >= ell) {
    SolveResult res = matching_yes(g, m, "stc-labeling-dp");
    res.stats.wall_ms = elapsed_ms(start);
    return res;
  }
  SolveResult res;
  res.solver = "stc-labeling-dp";
  CoverContext ctx(g, matching_cover(g));
  StcEllSearch search(g, ctx, ell);
  bool ok = search.run();
  res.stats.nodes = search.nodes;
  if (ok) {
    const DpTable& t = search.table;
    std::vector<Mask> sm = strong_masks(g, ctx, search.strong);
    std::vector<int> strong = search.strong;
    Mask mask = ctx.full();
    for (std::size_t i = ctx.independent.size(); i > 0; --i) {
      const auto& prev = t.entries[i - 1];
      int target = t.entries[i][mask];
      int v = ctx.independent[i - 1];
      for (Mask s : valid_masks(ctx, usable_bits(ctx, sm, i - 1))) {
        if ((s & mask) != s || prev[mask ^ s] + std::popcount(s) != target) continue;
        for (int j = 0; j < ctx.size(); ++j)
          if (s >> j & 1) strong.push_back(*g.edge_index(v, ctx.cover[j]));
        mask ^= s;
        break;
      }
    }
    std::sort(strong.begin(), strong.end());
    res.feasible = true;
    res.certificate = Labeling::from_strong(g.edge_count(), strong);
    res.strong = static_cast<int>(strong.size());
    res.weak = g.edge_count() - res.strong;
  }
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

}  // namespace stc
