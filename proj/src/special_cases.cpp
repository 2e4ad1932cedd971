#include "stc/special_cases.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>

#include "stc/errors.h"
#include "stc/labeling.h"

namespace stc {

namespace {

Graph make(int n, std::vector<std::pair<int, int>> e) { return Graph::from_edge_list(n, e); }

std::vector<PatternInfo> build_catalog() {
  return {
      {Pattern::K3, "k3", make(3, {{0, 1}, {0, 2}, {1, 2}})},
      {Pattern::P3, "p3", make(3, {{0, 1}, {1, 2}})},
      {Pattern::K2K1, "k2k1", make(3, {{0, 1}})},
      {Pattern::ThreeK1, "3k1", make(3, {})},
      {Pattern::P4, "p4", make(4, {{0, 1}, {1, 2}, {2, 3}})},
      {Pattern::K4, "k4", make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
      {Pattern::Diamond, "diamond", make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
      {Pattern::C4, "c4", make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {Pattern::Paw, "paw", make(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})},
      {Pattern::Claw, "claw", make(4, {{0, 1}, {0, 2}, {0, 3}})},
      {Pattern::CoDiamond, "co-diamond", make(4, {{0, 1}})},
      {Pattern::TwoK2, "2k2", make(4, {{0, 1}, {2, 3}})},
      {Pattern::CoPaw, "co-paw", make(4, {{0, 3}, {1, 3}})},
      {Pattern::CoClaw, "co-claw", make(4, {{1, 2}, {1, 3}, {2, 3}})},
      {Pattern::FourK1, "4k1", make(4, {})},
  };
}

// Bit index of pair (a,b) among positions of a 3- or 4-tuple.
constexpr int kPairBit3[3][3] = {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}};
constexpr int kPairBit4[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};

// For each adjacency code of a k-tuple, a permutation perm with pattern
// vertex j placed at tuple position perm[j], or empty when not isomorphic.
struct CodeTable {
  int k = 0;
  std::vector<std::vector<int>> perm;
};

CodeTable build_code_table(const Graph& h) {
  CodeTable t;
  t.k = h.vertex_count();
  int bits = t.k * (t.k - 1) / 2;
  t.perm.assign(std::size_t{1} << bits, {});
  std::vector<int> p(t.k);
  std::iota(p.begin(), p.end(), 0);
  do {
    int code = 0;
    for (const Edge& e : h.edges()) code |= 1 << (t.k == 3 ? kPairBit3[p[e.u]][p[e.v]] : kPairBit4[p[e.u]][p[e.v]]);
    if (t.perm[code].empty()) t.perm[code] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

const std::vector<CodeTable>& code_tables() {
  static const std::vector<CodeTable> tables = [] {
    std::vector<CodeTable> out;
    for (const PatternInfo& info : pattern_catalog()) out.push_back(build_code_table(info.graph));
    return out;
  }();
  return tables;
}

SolveResult labeled_result(const Graph& g, const std::vector<int>& strong, const char* solver,
                           std::chrono::steady_clock::time_point start) {
  SolveResult res;
  res.feasible = true;
  res.solver = solver;
  res.certificate = Labeling::from_strong(g.edge_count(), strong);
  res.strong = static_cast<int>(strong.size());
  res.weak = g.edge_count() - res.strong;
  res.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

void require_free(const Graph& g, Pattern p, const char* class_name) {
  if (auto w = find_induced(g, p))
    throw PreconditionError(std::string("graph is not ") + class_name + ": induced " + pattern_info(p).token +
                                " found",
                            *w);
}

std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& s) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp(n), frontier(n);
    comp.insert(left.first());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      VertexSet next(n);
      frontier.for_each([&](int v) { next |= (s - g.neighbor_set(v)); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp(n), frontier(n);
    comp.insert(left.first());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      VertexSet next(n);
      frontier.for_each([&](int v) { next |= (g.neighbor_set(v) & s); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

int build_node(const Graph& g, const VertexSet& s, Cotree& t) {
  int id = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  if (s.size() == 1) {
    t.nodes[id].vertex = s.first();
    return id;
  }
  std::vector<VertexSet> parts = components_within(g, s);
  Cotree::Kind kind = Cotree::Kind::Union;
  if (parts.size() == 1) {
    parts = complement_components(g, s);
    kind = Cotree::Kind::Join;
    if (parts.size() == 1) return -1;
  }
  t.nodes[id].kind = kind;
  for (const VertexSet& part : parts) {
    int child = build_node(g, part, t);
    if (child < 0) return -1;
    t.nodes[id].children.push_back(child);
  }
  return id;
}

std::vector<int> clique_below(const Cotree& t, int id) {
  const Cotree::Node& node = t.nodes[id];
  if (node.kind == Cotree::Kind::Leaf) return {node.vertex};
  std::vector<int> best;
  for (int c : node.children) {
    std::vector<int> sub = clique_below(t, c);
    if (node.kind == Cotree::Kind::Join)
      best.insert(best.end(), sub.begin(), sub.end());
    else if (sub.size() > best.size())
      best = std::move(sub);
  }
  return best;
}

void leaves_below(const Cotree& t, int id, std::vector<int>& out) {
  const Cotree::Node& node = t.nodes[id];
  if (node.kind == Cotree::Kind::Leaf) out.push_back(node.vertex);
  for (int c : node.children) leaves_below(t, c, out);
}

}  // namespace

const std::vector<PatternInfo>& pattern_catalog() {
  static const std::vector<PatternInfo> catalog = build_catalog();
  return catalog;
}

const PatternInfo& pattern_info(Pattern p) { return pattern_catalog()[static_cast<int>(p)]; }

Pattern parse_pattern(const std::string& token) {
  for (const PatternInfo& info : pattern_catalog())
    if (info.token == token) return info.id;
  throw ContractError("unknown pattern '" + token + "'");
}

std::optional<std::vector<int>> find_induced(const Graph& g, Pattern p) {
  const CodeTable& table = code_tables()[static_cast<int>(p)];
  int n = g.vertex_count();
  int k = table.k;
  auto witness = [&](const std::array<int, 4>& tuple, int code) {
    std::vector<int> w(k);
    for (int j = 0; j < k; ++j) w[j] = tuple[table.perm[code][j]];
    return w;
  };
  std::array<int, 4> t{};
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = t[0] + 1; t[1] < n; ++t[1]) {
      int c01 = g.has_edge(t[0], t[1]) ? 1 : 0;
      for (t[2] = t[1] + 1; t[2] < n; ++t[2]) {
        int c3 = c01 | (g.has_edge(t[0], t[2]) ? 2 : 0);
        if (k == 3) {
          int code = c3 | (g.has_edge(t[1], t[2]) ? 4 : 0);
          if (!table.perm[code].empty()) return witness(t, code);
          continue;
        }
        c3 |= g.has_edge(t[1], t[2]) ? 8 : 0;
        for (t[3] = t[2] + 1; t[3] < n; ++t[3]) {
          int code = c3 | (g.has_edge(t[0], t[3]) ? 4 : 0) | (g.has_edge(t[1], t[3]) ? 16 : 0) |
                     (g.has_edge(t[2], t[3]) ? 32 : 0);
          if (!table.perm[code].empty()) return witness(t, code);
        }
      }
    }
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced(const Graph& g, const std::string& token) {
  return find_induced(g, parse_pattern(token));
}

bool is_free_of(const Graph& g, Pattern p) { return !find_induced(g, p).has_value(); }

Graph Cotree::evaluate(int vertex_count) const {
  std::vector<std::pair<int, int>> pairs;
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
    if (nodes[id].kind != Kind::Join) continue;
    std::vector<std::vector<int>> groups;
    for (int c : nodes[id].children) {
      groups.emplace_back();
      leaves_below(*this, c, groups.back());
    }
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b)
        for (int u : groups[a])
          for (int v : groups[b]) pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  return Graph::from_edge_list(vertex_count, pairs);
}

std::vector<int> Cotree::maximum_clique() const {
  if (nodes.empty()) return {};
  std::vector<int> c = clique_below(*this, 0);
  std::sort(c.begin(), c.end());
  return c;
}

std::optional<Cotree> build_cotree(const Graph& g) {
  Cotree t;
  if (g.vertex_count() == 0) return t;
  if (build_node(g, VertexSet::full(g.vertex_count()), t) < 0) return std::nullopt;
  return t;
}

SolveResult solve_triangle_free(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  require_free(g, Pattern::K3, "triangle-free");
  return labeled_result(g, maximum_matching(g).edges, "triangle-free", start);
}

SolveResult solve_p3_free(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  require_free(g, Pattern::P3, "P3-free");
  std::vector<int> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  return labeled_result(g, all, "p3-free", start);
}

SolveResult solve_cograph(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  require_free(g, Pattern::P4, "a cograph");
  int n = g.vertex_count();
  std::vector<int> cluster_of(n, -1);
  VertexSet left = VertexSet::full(n);
  for (int id = 0; !left.empty(); ++id) {
    InducedSubgraph sub = induced_subgraph(g, left);
    auto tree = build_cotree(sub.graph);
    if (!tree) throw ContractError("induced subgraph of a cograph has no cotree");
    for (int v : tree->maximum_clique()) {
      cluster_of[sub.to_original[v]] = id;
      left.erase(sub.to_original[v]);
    }
  }
  std::vector<int> strong;
  for (int e = 0; e < g.edge_count(); ++e)
    if (cluster_of[g.edge(e).u] == cluster_of[g.edge(e).v]) strong.push_back(e);
  return labeled_result(g, strong, "cograph", start);
}

SolveResult solve_paw_free(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  require_free(g, Pattern::Paw, "paw-free");
  std::vector<int> strong;
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    SolveResult part;
    if (is_free_of(sub.graph, Pattern::K3)) {
      part = solve_triangle_free(sub.graph);
    } else {
      if (!is_cluster_graph(complement(sub.graph)))
        throw ContractError("paw-free component is neither triangle-free nor complete multipartite");
      part = solve_cograph(sub.graph);
    }
    for (int e : part.certificate->strong_edges()) {
      const Edge& ed = sub.graph.edge(e);
      strong.push_back(*g.edge_index(sub.to_original[ed.u], sub.to_original[ed.v]));
    }
  }
  std::sort(strong.begin(), strong.end());
  return labeled_result(g, strong, "paw-free", start);
}

const char* solver_tag_name(SolverTag t) {
  switch (t) {
    case SolverTag::P3Free: return "p3-free";
    case SolverTag::TriangleFree: return "triangle-free";
    case SolverTag::Cograph: return "cograph";
    case SolverTag::PawFree: return "paw-free";
    case SolverTag::Exponential: break;
  }
  return "exponential";
}

SolverTag dispatch(const Graph& g) {
  if (is_free_of(g, Pattern::P3)) return SolverTag::P3Free;
  if (is_free_of(g, Pattern::K3)) return SolverTag::TriangleFree;
  if (is_free_of(g, Pattern::P4)) return SolverTag::Cograph;
  if (is_free_of(g, Pattern::Paw)) return SolverTag::PawFree;
  if (is_free_of(g, Pattern::K2K1)) return SolverTag::PawFree;
  return SolverTag::Exponential;
}

SolveResult solve_special(const Graph& g, SolverTag t) {
  switch (t) {
    case SolverTag::P3Free: return solve_p3_free(g);
    case SolverTag::TriangleFree: return solve_triangle_free(g);
    case SolverTag::Cograph: return solve_cograph(g);
    case SolverTag::PawFree: return solve_paw_free(g);
    case SolverTag::Exponential: break;
  }
  throw ContractError("no polynomial solver applies");
}

CorrespondenceEntry correspondence_table(Pattern p) {
  switch (p) {
    case Pattern::K3:
    case Pattern::P3:
    case Pattern::K2K1:
    case Pattern::P4:
    case Pattern::Paw: return {true, true};
    case Pattern::Diamond: return {true, false};
    default: return {false, false};
  }
}

CorrespondenceEntry correspondence_table(const std::string& token) { return correspondence_table(parse_pattern(token)); }

}  // namespace stc
