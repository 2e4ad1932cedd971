#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stc/graph.h"
#include "stc/solve_result.h"

namespace stc {

/// Gallai graph of a host graph: node i is edge i of the host, and two nodes
/// conflict when their edges form an induced P3.
struct ConflictGraph {
  int node_count = 0;
  std::vector<VertexSet> adjacency;
  std::vector<Conflict> conflicts;
  Graph host;

  int conflict_count() const { return static_cast<int>(conflicts.size()); }
  int degree(int node) const { return adjacency[node].size(); }
};

ConflictGraph gallai_graph(const Graph& g);

/// Minimum vertex cover of the conflict graph if its size is at most budget,
/// otherwise nullopt. Among minimum covers the lexicographically smallest
/// sorted index list is returned. nodes, when given, accumulates search nodes.
std::optional<std::vector<int>> min_vertex_cover(const ConflictGraph& cg, int budget, std::uint64_t* nodes = nullptr);

struct StcKOptions {
  bool kernelize = true;
};

/// Decides whether g has an STC-labeling with at most k weak edges; on yes
/// the certificate is an optimal labeling (weak = minimum conflict cover).
SolveResult solve_stc_k(const Graph& g, int k, const StcKOptions& options = {});

/// Minimum number of weak edges, found by raising k until solve_stc_k says yes.
SolveResult solve_stc_min_weak(const Graph& g, const StcKOptions& options = {});

}  // namespace stc
