#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stc/labeling.h"

namespace stc {

enum class Verdict { Undecided, Yes, No };

const char* verdict_name(Verdict v);

/// One kernelization rule application, vertices in original indices.
struct TraceEntry {
  std::string rule;            // "rule1", "rule2", "matching", "size_bound", "budget"
  std::vector<int> removed;    // original vertex indices
  long long budget_delta = 0;  // decrease of k
};

struct SolveStats {
  std::uint64_t nodes = 0;
  int rules_fired = 0;
  double wall_ms = 0.0;
};

/// Outcome of a solver call. When feasible, certificate holds a labeling of
/// the input graph; for cluster deletion its weak edges are the deletions.
struct SolveResult {
  bool feasible = false;
  int strong = 0;  // strong edges / cluster edges of the certificate
  int weak = 0;    // weak edges / deletions of the certificate
  std::optional<Labeling> certificate;
  std::string solver;
  SolveStats stats;
  std::vector<TraceEntry> trace;
};

}  // namespace stc
