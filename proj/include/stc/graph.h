#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stc/vertex_set.h"

namespace stc {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  int other(int x) const { return x == u ? v : u; }
  bool has(int x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Two edges {a,center} and {center,b} forming an induced P3 (a and b non-adjacent).
/// first < second as edge indices.
struct Conflict {
  int first = 0;
  int second = 0;
  friend bool operator==(const Conflict&, const Conflict&) = default;
  friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1. Edge i is the i-th
/// pair of the list it was built from.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, out-of-range endpoints and duplicate pairs.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);
  static Graph empty(int n) { return from_edge_list(n, {}); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  /// Edge index of {v, neighbors(v)[j]}.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
  const VertexSet& neighbor_set(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(int u, int v) const { return u != v && rows_[u].contains(v); }
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<VertexSet> rows_;
};

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the index in the host graph of vertex i.
  std::vector<int> to_original;
};

enum class MatchingKind { Maximal, Maximum };

struct Matching {
  std::vector<int> edges;  // sorted edge indices
  MatchingKind kind = MatchingKind::Maximal;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Every induced P3 as the pair of its edge indices, sorted, each once.
std::vector<Conflict> enumerate_p3(const Graph& g);

/// Vertices keep their relative order; retained edges keep their relative order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Greedy over edges in ascending index order.
Matching maximal_matching(const Graph& g);

/// Edmonds' blossom algorithm, O(n^3).
Matching maximum_matching(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_matching(const Graph& g, const std::vector<int>& edges);

/// Edges listed in lexicographic order.
Graph complement(const Graph& g);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Edge indices of g with both endpoints in s.
std::vector<int> edges_within(const Graph& g, const VertexSet& s);

}  // namespace stc
