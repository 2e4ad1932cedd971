#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stc/graph.h"
#include "stc/labeling.h"
#include "stc/special_cases.h"

namespace stc {

struct VertexGroup {
  std::string name;
  std::vector<int> vertices;
};

/// Output of a reduction construction. Groups partition V in vertex order.
struct ReductionArtifact {
  Graph graph;
  std::optional<long long> k;
  std::optional<long long> ell;
  std::vector<VertexGroup> groups;
  bool faithful = true;  // false when a padding override shrank the construction

  const VertexGroup& group(const std::string& name) const;
};

/// (a) K4 on 0..3 with outer vertices 4..7 each joined to a different
/// triangle of the K4; (b) the complement of C7.
std::pair<Graph, Graph> fig3_graphs();

/// g plus a clique of padding vertices joined to every vertex of g. Default
/// padding is n^3. Groups: "original", "padding".
ReductionArtifact expanded_graph(const Graph& g, std::optional<int> padding = std::nullopt);

/// k = m̂ - (C(p,2) + t·p) for an expanded graph with p padding vertices.
long long expanded_budget(const ReductionArtifact& expanded, int t);

/// Vertex-cover-parameterized clique to multicolored clique. Groups "C1".."Ct"
/// in class order. Throws PreconditionError with the uncovered edge when
/// cover is not a vertex cover, ContractError when t is outside 1..|cover|+1.
ReductionArtifact clique_vc_to_rmc(const Graph& g, const VertexSet& cover, int t);

/// Adds z-1 attached cliques of size t to each of the first t-1 classes.
/// classes[r] lists the vertices of C_{r+1}; the last entry is C_t. Sets
/// ell = C(t,2) + (t-1)(z-1)C(t+1,2) and k = |E'| - ell. Groups: the
/// original vertices as "original", then "K_i_r" in construction order.
ReductionArtifact rmc_to_stc(const Graph& g, const std::vector<std::vector<int>>& classes);

/// Strong edges E(M) ∪ E(attached cliques) ∪ E({v_i_r}, K_i_r), where the
/// non-M vertices of C_r are paired in order with K_1_r..K_{z-1}_r.
/// clique lists one vertex per class, in class order.
Labeling rmc_forward_labeling(const ReductionArtifact& artifact, const std::vector<std::vector<int>>& classes,
                              const std::vector<int>& clique);

/// Three cliques K1, K2, K3 of p = n^3 vertices each (default), all joined to
/// V, with v_{c,i} ~ v_{d,j} iff c != d. k = |E'| - (3·C(p,2) + p·n).
/// Groups: "original", "K1", "K2", "K3".
ReductionArtifact three_clique_cover_to_coclaw(const Graph& g, std::optional<int> padding = std::nullopt);

struct CorpusSpec {
  std::string family;  // "gnp", "hfree", "all"
  int n = 0;
  double p = 0.5;
  int count = 0;
  std::optional<Pattern> forbidden;  // hfree only
};

/// Deterministic under seed. "all" enumerates every labeled graph on n <= 7
/// vertices in edge-mask order and ignores count. Throws ContractError on an
/// unknown family.
std::vector<Graph> corpus(std::uint64_t seed, const CorpusSpec& spec);

/// Calls f on each labeled graph with n vertices; pair i of the lexicographic
/// pair order is present iff bit i of the mask is set.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& f);

/// Labeled graph on n vertices from a pair mask.
Graph graph_from_mask(int n, std::uint64_t mask);

/// uniform in [0,1) from the top 53 bits, portable across standard libraries.
double unit_uniform(std::uint64_t bits);

}  // namespace stc
