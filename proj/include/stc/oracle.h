#pragma once

#include "stc/graph.h"
#include "stc/labeling.h"

namespace stc {

struct OracleBudget {
  int max_edges = 20;     // STC search
  int max_vertices = 10;  // CD partition search

  /// Defaults overridden by ORACLE_MAX_EDGES / ORACLE_MAX_VERTICES when set.
  static OracleBudget from_environment();
};

struct StcOptimum {
  int strong = 0;
  Labeling labeling;
};

struct CdOptimum {
  int cluster_edges = 0;
  DeletionSet deletions;
};

/// Exhaustive branching over conflict-graph nodes. Throws ResourceLimitError
/// when m exceeds budget.max_edges.
StcOptimum brute_stc_optimum(const Graph& g, const OracleBudget& budget = {});

/// Second opinion that searches edge subsets and tests strong pairs against
/// the adjacency directly, without the conflict graph. Limit defaults to 16.
StcOptimum brute_stc_optimum_raw(const Graph& g, int max_edges = 16);

/// Restricted-growth enumeration of partitions of V into cliques. Throws
/// ResourceLimitError when n exceeds budget.max_vertices.
CdOptimum brute_cd_optimum(const Graph& g, const OracleBudget& budget = {});

struct CorrespondenceReport {
  int stc_opt = 0;
  int cd_opt = 0;
  bool corresponds = false;
};

CorrespondenceReport correspondence_check(const Graph& g, const OracleBudget& budget = {});

}  // namespace stc
