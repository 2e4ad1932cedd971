#include "stc/oracle.h"

#include <cstdlib>
#include <string>

#include "stc/errors.h"

namespace stc {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0 || v > 1000000) throw ContractError(std::string(name) + " must be a positive integer");
  return static_cast<int>(v);
}

class MisSearch {
 public:
  explicit MisSearch(const std::vector<VertexSet>& adj) : adj_(adj) {}

  void run(VertexSet live, VertexSet& chosen) {
    int count = chosen.size();
    if (count + live.size() <= best_size_) return;
    int v = live.first();
    if (v < 0) {
      best_size_ = count;
      best_ = chosen;
      return;
    }
    live.erase(v);
    chosen.insert(v);
    run(live - adj_[v], chosen);
    chosen.erase(v);
    run(live, chosen);
  }

  int best_size_ = -1;
  VertexSet best_;

 private:
  const std::vector<VertexSet>& adj_;
};

class RawSearch {
 public:
  explicit RawSearch(const Graph& g) : best_(g.edge_count(), false), g_(g), strong_(g.edge_count(), false) {}

  void run(int e, int count) {
    int m = g_.edge_count();
    if (count + (m - e) <= best_size_) return;
    if (e == m) {
      best_size_ = count;
      best_ = strong_;
      return;
    }
    if (compatible(e)) {
      strong_[e] = true;
      run(e + 1, count + 1);
      strong_[e] = false;
    }
    run(e + 1, count);
  }

  int best_size_ = -1;
  std::vector<bool> best_;

 private:
  // Edge e may join the strong set if every strong edge sharing an endpoint
  // closes a triangle with it.
  bool compatible(int e) const {
    const Edge& x = g_.edge(e);
    for (int f = 0; f < e; ++f) {
      if (!strong_[f]) continue;
      const Edge& y = g_.edge(f);
      int shared = -1;
      if (x.u == y.u || x.u == y.v) shared = x.u;
      if (x.v == y.u || x.v == y.v) shared = x.v;
      if (shared < 0) continue;
      int a = x.u == shared ? x.v : x.u;
      int b = y.u == shared ? y.v : y.u;
      if (!g_.has_edge(a, b)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<bool> strong_;
};

class PartitionSearch {
 public:
  explicit PartitionSearch(const Graph& g)
      : best_part_(g.vertex_count(), -1), g_(g), part_of_(g.vertex_count(), -1) {}

  void run(int v, int inside) {
    int n = g_.vertex_count();
    if (v == n) {
      if (inside > best_) {
        best_ = inside;
        best_part_ = part_of_;
      }
      return;
    }
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (!parts_[j].is_subset_of(g_.neighbor_set(v))) continue;
      int gain = parts_[j].size();
      parts_[j].insert(v);
      part_of_[v] = static_cast<int>(j);
      run(v + 1, inside + gain);
      parts_[j].erase(v);
    }
    parts_.emplace_back(n);
    parts_.back().insert(v);
    part_of_[v] = static_cast<int>(parts_.size()) - 1;
    run(v + 1, inside);
    parts_.pop_back();
    part_of_[v] = -1;
  }

  int best_ = -1;
  std::vector<int> best_part_;

 private:
  const Graph& g_;
  std::vector<VertexSet> parts_;
  std::vector<int> part_of_;
};

}  // namespace

OracleBudget OracleBudget::from_environment() {
  OracleBudget b;
  b.max_edges = env_int("ORACLE_MAX_EDGES", b.max_edges);
  b.max_vertices = env_int("ORACLE_MAX_VERTICES", b.max_vertices);
  return b;
}

StcOptimum brute_stc_optimum(const Graph& g, const OracleBudget& budget) {
  int m = g.edge_count();
  if (m > budget.max_edges)
    throw ResourceLimitError("STC oracle limited to " + std::to_string(budget.max_edges) + " edges, graph has " +
                             std::to_string(m));
  std::vector<VertexSet> adj(m, VertexSet(m));
  for (const Conflict& c : enumerate_p3(g)) {
    adj[c.first].insert(c.second);
    adj[c.second].insert(c.first);
  }
  MisSearch search(adj);
  VertexSet chosen(m);
  search.run(VertexSet::full(m), chosen);
  return {search.best_size_, Labeling::from_strong(m, search.best_.to_vector())};
}

StcOptimum brute_stc_optimum_raw(const Graph& g, int max_edges) {
  int m = g.edge_count();
  if (m > max_edges)
    throw ResourceLimitError("raw STC oracle limited to " + std::to_string(max_edges) + " edges, graph has " +
                             std::to_string(m));
  RawSearch search(g);
  search.run(0, 0);
  std::vector<int> strong;
  for (int e = 0; e < m; ++e)
    if (search.best_[e]) strong.push_back(e);
  return {search.best_size_, Labeling::from_strong(m, strong)};
}

CdOptimum brute_cd_optimum(const Graph& g, const OracleBudget& budget) {
  int n = g.vertex_count();
  if (n > budget.max_vertices)
    throw ResourceLimitError("CD oracle limited to " + std::to_string(budget.max_vertices) + " vertices, graph has " +
                             std::to_string(n));
  PartitionSearch search(g);
  search.run(0, 0);
  CdOptimum out;
  out.cluster_edges = n == 0 ? 0 : search.best_;
  for (int e = 0; e < g.edge_count(); ++e)
    if (search.best_part_[g.edge(e).u] != search.best_part_[g.edge(e).v]) out.deletions.deleted.push_back(e);
  return out;
}

CorrespondenceReport correspondence_check(const Graph& g, const OracleBudget& budget) {
  CorrespondenceReport r;
  r.stc_opt = brute_stc_optimum(g, budget).strong;
  r.cd_opt = brute_cd_optimum(g, budget).cluster_edges;
  r.corresponds = r.stc_opt == r.cd_opt;
  return r;
}

}  // namespace stc
