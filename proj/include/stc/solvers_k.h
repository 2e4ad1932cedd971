#pragma once

#include "stc/graph.h"
#include "stc/solve_result.h"

namespace stc {

/// Decides whether at most k edge deletions turn g into a cluster graph. On
/// yes the certificate is the cluster labeling of a minimum deletion set.
SolveResult solve_cd_k(const Graph& g, int k);

/// Minimum deletion set, raising k until solve_cd_k says yes.
SolveResult solve_cd_min_deletions(const Graph& g);

}  // namespace stc
