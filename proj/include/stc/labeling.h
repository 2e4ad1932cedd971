#pragma once

#include <optional>
#include <vector>

#include "stc/graph.h"

namespace stc {

/// Partition of a graph's edge indices into strong and weak edges.
class Labeling {
 public:
  Labeling() = default;

  static Labeling all_weak(int edge_count) { return Labeling(edge_count); }
  static Labeling all_strong(int edge_count);
  static Labeling from_strong(int edge_count, const std::vector<int>& strong);
  /// Throws ContractError unless strong and weak partition 0..edge_count-1.
  static Labeling from_partition(int edge_count, const std::vector<int>& strong, const std::vector<int>& weak);

  int edge_count() const { return static_cast<int>(strong_.size()); }
  bool is_strong(int e) const { return strong_[e]; }
  void set_strong(int e, bool strong) { strong_[e] = strong; }

  std::vector<int> strong_edges() const;
  std::vector<int> weak_edges() const;
  int strong_count() const;
  int weak_count() const { return edge_count() - strong_count(); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  explicit Labeling(int edge_count) : strong_(edge_count, false) {}
  std::vector<bool> strong_;
};

/// Edge indices removed from a host graph, sorted.
struct DeletionSet {
  std::vector<int> deleted;
};

/// A strong P3: edges {a,center} and {center,b} both strong, {a,b} not an edge.
struct StcViolation {
  int first_edge = 0;
  int second_edge = 0;
  int a = 0;
  int center = 0;
  int b = 0;
};

/// Violations in conflict order (ascending edge-index pairs). With all=false
/// at most the first one is returned. Throws ContractError when the labeling
/// was built for a different edge count.
std::vector<StcViolation> stc_violations(const Graph& g, const Labeling& l, bool all = false);

bool is_stc_labeling(const Graph& g, const Labeling& l);

bool is_cluster_graph(const Graph& g);

/// The graph with the given edges removed; surviving edges keep their order.
Graph delete_edges(const Graph& g, const std::vector<int>& deleted);

/// strong = E \ D, weak = D. Throws PreconditionError with witness
/// {a, center, b} (vertex indices) when G - D is not a cluster graph.
Labeling cluster_labeling(const Graph& g, const DeletionSet& d);

/// True iff the strong edges of l form a cluster subgraph (disjoint cliques
/// spanning exactly the strong edges).
bool is_cluster_labeling(const Graph& g, const Labeling& l);

}  // namespace stc
