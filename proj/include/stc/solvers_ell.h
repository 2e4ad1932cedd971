#pragma once

#include <cstdint>
#include <vector>

#include "stc/graph.h"
#include "stc/solve_result.h"

namespace stc {

/// Largest cover the subset tables accept.
inline constexpr int kMaxCoverVertices = 24;

/// Subset table over a cover C and the remaining vertices I. Bit j of a mask
/// stands for cover[j]. entries[i][mask] is T[i, C'].
struct DpTable {
  std::vector<int> cover;        // C, ascending
  std::vector<int> independent;  // I, ascending
  std::vector<std::vector<int>> entries;

  int cover_size() const { return static_cast<int>(cover.size()); }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << cover.size()) - 1; }
  int value(std::size_t i, std::uint32_t mask) const { return entries[i][mask]; }
  int answer() const { return entries.back()[full_mask()]; }
};

/// Strong edges of G[C] (edge indices of the host graph), forming an
/// STC-labeling of G[C].
struct PartialLabeling {
  std::vector<int> strong_in_cover;
};

/// Endpoints of the greedy maximal matching.
VertexSet matching_cover(const Graph& g);

/// Cluster table: T[0,C'] partitions C' into cliques, T[i,C'] lets I-vertex i
/// join a clique C'' of C' with C'' in N(i). The build functions throw
/// ResourceLimitError when |C| exceeds kMaxCoverVertices or the table would
/// not fit in memory.
DpTable build_cd_table(const Graph& g, const VertexSet& cover);

/// Subsets C'' of N(i) ∩ C that are cliques and contain no vertex with a
/// strong neighbor (under S_C) in C \ N(i). Ordered by mask value.
std::vector<VertexSet> valid_strong_neighbor_sets(const Graph& g, const VertexSet& cover, const PartialLabeling& s,
                                                  int i);

/// STC table for a fixed S_C: T[0,C'] = |S_C|, T[i,C'] = max over valid C''
/// contained in C' of T[i-1, C' \ C''] + |C''|.
DpTable build_stc_table(const Graph& g, const VertexSet& cover, const PartialLabeling& s);

/// Is there a cluster subgraph with at least ell edges?
SolveResult solve_cd_ell(const Graph& g, int ell);

/// Is there an STC-labeling with at least ell strong edges?
SolveResult solve_stc_ell(const Graph& g, int ell);

}  // namespace stc
