#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stc/graph.h"
#include "stc/solve_result.h"

namespace stc {

enum class Pattern {
  K3,
  P3,
  K2K1,
  ThreeK1,
  P4,
  K4,
  Diamond,
  C4,
  Paw,
  Claw,
  CoDiamond,
  TwoK2,
  CoPaw,
  CoClaw,
  FourK1,
};

struct PatternInfo {
  Pattern id;
  std::string token;  // k3, p3, k2k1, 3k1, p4, k4, diamond, c4, paw, claw, co-diamond, 2k2, co-paw, co-claw, 4k1
  Graph graph;
};

/// The fifteen 3- and 4-vertex patterns in the order of the Pattern enum.
const std::vector<PatternInfo>& pattern_catalog();
const PatternInfo& pattern_info(Pattern p);
/// Throws ContractError on an unknown token.
Pattern parse_pattern(const std::string& token);

/// First induced copy of the pattern: vertex combinations are scanned in
/// lexicographic order and witness[j] is the host vertex playing pattern
/// vertex j.
std::optional<std::vector<int>> find_induced(const Graph& g, Pattern p);
std::optional<std::vector<int>> find_induced(const Graph& g, const std::string& token);
bool is_free_of(const Graph& g, Pattern p);

/// Cotree of a P4-free graph. Node 0 is the root.
struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    int vertex = -1;  // leaves only
    std::vector<int> children;
  };
  std::vector<Node> nodes;

  /// Rebuilds the graph the tree describes on vertex_count vertices.
  Graph evaluate(int vertex_count) const;
  /// Maximum clique by union = max of children, join = sum of children.
  std::vector<int> maximum_clique() const;
};

/// nullopt when g contains an induced P4.
std::optional<Cotree> build_cotree(const Graph& g);

/// Each solver throws PreconditionError carrying a witness (host vertices in
/// pattern order) when g is outside its class. The certificate is a cluster
/// labeling that is also an optimal STC-labeling.
SolveResult solve_triangle_free(const Graph& g);
SolveResult solve_p3_free(const Graph& g);
SolveResult solve_cograph(const Graph& g);
SolveResult solve_paw_free(const Graph& g);

/// First applicable polynomial solver in the order P3-free, K3-free, P4-free,
/// paw-free, K2+K1-free (the last is routed to the paw-free solver).
enum class SolverTag { P3Free, TriangleFree, Cograph, PawFree, Exponential };
const char* solver_tag_name(SolverTag t);
SolverTag dispatch(const Graph& g);
/// Runs the solver named by the tag; Exponential throws ContractError.
SolveResult solve_special(const Graph& g, SolverTag t);

struct CorrespondenceEntry {
  bool corresponds = false;
  bool polynomial = false;  // false means NP-hard
};
CorrespondenceEntry correspondence_table(Pattern p);
CorrespondenceEntry correspondence_table(const std::string& token);

}  // namespace stc
