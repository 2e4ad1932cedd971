#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stc/graph.h"
#include "stc/labeling.h"
#include "stc/solve_result.h"

namespace stc {

/// Partition of V into critical cliques (classes of vertices with equal
/// closed neighborhoods) together with the critical clique graph.
struct CriticalCliqueDecomposition {
  std::vector<VertexSet> cliques;              // ordered by smallest member
  std::vector<int> clique_of;                  // vertex -> clique index
  std::vector<std::vector<int>> cc_adjacency;  // sorted clique indices
  std::vector<bool> closed;                    // neighborhood union is a clique of G

  int size() const { return static_cast<int>(cliques.size()); }
  /// Union of the cliques adjacent to clique k in the critical clique graph.
  VertexSet neighborhood(int k) const;
  /// Union of the cliques at distance exactly two from clique k.
  VertexSet second_neighborhood(int k) const;
};

CriticalCliqueDecomposition critical_cliques(const Graph& g);

/// |E(N(K), N^2(K))| for clique k of the decomposition.
int boundary_edge_count(const Graph& g, const CriticalCliqueDecomposition& d, int k);

/// Sizes of the matched / both-endpoints / remaining classes used by the
/// matching-based kernel, measured on the reduced graph.
struct MatchingPartition {
  int matched = 0;     // endpoints of the maximum matching
  int two_sided = 0;   // unmatched, adjacent to both ends of a matching edge
  int one_sided = 0;   // all other unmatched vertices
};

struct ReducedInstance {
  Graph graph;
  long long budget = 0;         // k' for the closed-clique rule, ell for the family rule
  std::vector<TraceEntry> trace;
  std::vector<int> vertex_map;  // reduced index -> original index
  Verdict verdict = Verdict::Undecided;
  std::string reason;           // why a verdict was reached
  std::optional<MatchingPartition> partition;
  long long k_decrease = 0;     // total decrease of k over all applications

  static ReducedInstance identity(const Graph& g, long long budget);
};

/// One application of the closed-critical-clique rule: the qualifying closed
/// clique containing the smallest vertex is removed together with its
/// neighborhood and k drops by the boundary size. nullopt when no closed
/// clique K has |K| > |E(N(K), N^2(K))|. A negative resulting budget yields
/// verdict No.
std::optional<ReducedInstance> rule1_apply_once(const Graph& g, long long k);

/// Same rule applied to an existing reduced instance, composing vertex maps.
/// Returns false when the rule does not apply.
bool rule1_apply_once(ReducedInstance& ri);

/// Exhaustive application of the closed-clique rule. Verdict No when the
/// budget is exhausted or more than 4k' vertices remain; never Yes.
ReducedInstance kernelize_k(const Graph& g, long long k);

/// Matching-based family rule for parameter ell. Verdict Yes when a maximum
/// matching has at least ell edges (graph left unchanged). Otherwise every
/// family of one-sided vertices with equal neighborhoods larger than its
/// neighborhood loses its highest-indexed surplus members.
ReducedInstance rule2_apply(const Graph& g, long long ell);

/// |V| <= 2ell + ell + ell * 2^ell.
bool kernel_size_bound_check(const ReducedInstance& ri, long long ell);

/// True iff every edge between side and its complement is weak under l.
bool is_weak_cut(const Graph& g, const Labeling& l, const VertexSet& side);

/// Extends a labeling of the reduced graph of a closed-clique kernel back to
/// the original graph: edges inside one removed group are strong, edges
/// leaving a group weak.
Labeling lift_rule1_labeling(const Graph& original, const ReducedInstance& ri, const Labeling& reduced);

}  // namespace stc
