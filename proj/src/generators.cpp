#include "stc/generators.h"

#include <algorithm>
#include <random>
#include <string>

#include "stc/errors.h"

namespace stc {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

int cube(int n) { return n * n * n; }

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int v = from; v < to; ++v) out.push_back(v);
  return out;
}

// Pairs of an n-vertex graph in lexicographic order, as adjacency-matrix bits.
class PairMatrix {
 public:
  explicit PairMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, false) {}
  bool get(int u, int v) const { return bits_[u * n_ + v]; }
  void set(int u, int v, bool on) { bits_[u * n_ + v] = bits_[v * n_ + u] = on; }
  Graph graph() const {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (get(u, v)) pairs.emplace_back(u, v);
    return Graph::from_edge_list(n_, pairs);
  }

 private:
  int n_;
  std::vector<bool> bits_;
};

PairMatrix sample_gnp(std::mt19937_64& rng, int n, double p) {
  PairMatrix m(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) m.set(u, v, unit_uniform(rng()) < p);
  return m;
}

}  // namespace

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

const VertexGroup& ReductionArtifact::group(const std::string& name) const {
  for (const VertexGroup& g : groups)
    if (g.name == name) return g;
  throw ContractError("artifact has no vertex group '" + name + "'");
}

std::pair<Graph, Graph> fig3_graphs() {
  std::vector<std::pair<int, int>> a;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) a.emplace_back(u, v);
  // outer vertex 4 + j misses core vertex omit[j]
  const int omit[4] = {3, 0, 2, 1};
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < 4; ++c)
      if (c != omit[j]) a.emplace_back(c, 4 + j);
  std::vector<std::pair<int, int>> b;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v)
      if (v - u != 1 && v - u != 6) b.emplace_back(u, v);
  return {Graph::from_edge_list(8, a), Graph::from_edge_list(7, b)};
}

ReductionArtifact expanded_graph(const Graph& g, std::optional<int> padding) {
  int n = g.vertex_count();
  int p = padding.value_or(cube(n));
  if (p < 1) throw ContractError("padding must be at least 1");
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (int a = n; a < n + p; ++a)
    for (int b = a + 1; b < n + p; ++b) pairs.emplace_back(a, b);
  for (int v = 0; v < n; ++v)
    for (int a = n; a < n + p; ++a) pairs.emplace_back(v, a);
  ReductionArtifact out;
  out.graph = Graph::from_edge_list(n + p, pairs);
  out.groups = {{"original", range(0, n)}, {"padding", range(n, n + p)}};
  out.faithful = p == cube(n);
  return out;
}

long long expanded_budget(const ReductionArtifact& expanded, int t) {
  long long p = static_cast<long long>(expanded.group("padding").vertices.size());
  return expanded.graph.edge_count() - (choose2(p) + t * p);
}

ReductionArtifact clique_vc_to_rmc(const Graph& g, const VertexSet& cover, int t) {
  for (const Edge& e : g.edges())
    if (!cover.contains(e.u) && !cover.contains(e.v))
      throw PreconditionError("cover misses edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")",
                              {e.u, e.v});
  std::vector<int> s = cover.to_vector();
  int size = static_cast<int>(s.size());
  if (t < 1 || t > size + 1)
    throw ContractError("clique size " + std::to_string(t) + " outside 1.." + std::to_string(size + 1));
  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!cover.contains(v)) rest.push_back(v);
  // copy (i, j) of cover vertex s[i] in class j lives at j * size + i
  auto copy = [&](int i, int j) { return j * size + i; };
  int base = t * size;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size; ++i)
    for (int h = i + 1; h < size; ++h) {
      if (!g.has_edge(s[i], s[h])) continue;
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
          if (a != b) pairs.emplace_back(copy(i, a), copy(h, b));
    }
  for (int i = 0; i < size; ++i)
    for (std::size_t w = 0; w < rest.size(); ++w)
      if (g.has_edge(s[i], rest[w]))
        for (int j = 0; j + 1 < t; ++j) pairs.emplace_back(copy(i, j), base + static_cast<int>(w));
  std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) {
    return std::minmax(x.first, x.second) < std::minmax(y.first, y.second);
  });
  ReductionArtifact out;
  out.graph = Graph::from_edge_list(base + static_cast<int>(rest.size()), pairs);
  for (int j = 0; j < t; ++j) {
    VertexGroup grp{"C" + std::to_string(j + 1), range(j * size, (j + 1) * size)};
    if (j == t - 1)
      for (std::size_t w = 0; w < rest.size(); ++w) grp.vertices.push_back(base + static_cast<int>(w));
    out.groups.push_back(grp);
  }
  return out;
}

ReductionArtifact rmc_to_stc(const Graph& g, const std::vector<std::vector<int>>& classes) {
  int t = static_cast<int>(classes.size());
  if (t < 1) throw ContractError("at least one color class required");
  int z = t >= 2 ? static_cast<int>(classes[0].size()) : 0;
  std::vector<int> color(g.vertex_count(), -1);
  for (int r = 0; r < t; ++r)
    for (int v : classes[r]) {
      if (v < 0 || v >= g.vertex_count() || color[v] >= 0)
        throw ContractError("color classes must partition the vertex set");
      color[v] = r;
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (color[v] < 0) throw ContractError("vertex " + std::to_string(v) + " has no color class");
  for (const Edge& e : g.edges())
    if (color[e.u] == color[e.v]) throw ContractError("coloring is not proper");
  for (int r = 0; r + 1 < t; ++r)
    if (static_cast<int>(classes[r].size()) != z)
      throw ContractError("classes C1..C(t-1) must have equal size");

  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  ReductionArtifact out;
  out.groups.push_back({"original", range(0, g.vertex_count())});
  int next = g.vertex_count();
  for (int r = 0; r + 1 < t; ++r)
    for (int i = 0; i + 1 < z; ++i) {
      std::vector<int> k = range(next, next + t);
      next += t;
      for (std::size_t a = 0; a < k.size(); ++a)
        for (std::size_t b = a + 1; b < k.size(); ++b) pairs.emplace_back(k[a], k[b]);
      for (int u : k)
        for (int v : classes[r]) pairs.emplace_back(v, u);
      out.groups.push_back({"K_" + std::to_string(i + 1) + "_" + std::to_string(r + 1), k});
    }
  out.graph = Graph::from_edge_list(next, pairs);
  long long ell = choose2(t) + static_cast<long long>(t - 1) * (z > 0 ? z - 1 : 0) * choose2(t + 1);
  out.ell = ell;
  out.k = out.graph.edge_count() - ell;
  return out;
}

Labeling rmc_forward_labeling(const ReductionArtifact& artifact, const std::vector<std::vector<int>>& classes,
                              const std::vector<int>& clique) {
  const Graph& g = artifact.graph;
  int t = static_cast<int>(classes.size());
  if (static_cast<int>(clique.size()) != t) throw ContractError("clique must pick one vertex per class");
  std::vector<int> strong;
  auto add = [&](int u, int v) {
    auto e = g.edge_index(u, v);
    if (!e) throw ContractError("clique vertices " + std::to_string(u) + "," + std::to_string(v) + " not adjacent");
    strong.push_back(*e);
  };
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b) add(clique[a], clique[b]);
  for (int r = 0; r + 1 < t; ++r) {
    int i = 0;
    for (int v : classes[r]) {
      if (v == clique[r]) continue;
      const VertexGroup& k = artifact.group("K_" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
      for (std::size_t a = 0; a < k.vertices.size(); ++a) {
        add(v, k.vertices[a]);
        for (std::size_t b = a + 1; b < k.vertices.size(); ++b) add(k.vertices[a], k.vertices[b]);
      }
      ++i;
    }
  }
  std::sort(strong.begin(), strong.end());
  return Labeling::from_strong(g.edge_count(), strong);
}

ReductionArtifact three_clique_cover_to_coclaw(const Graph& g, std::optional<int> padding) {
  int n = g.vertex_count();
  int p = padding.value_or(cube(n));
  if (p < 1) throw ContractError("padding must be at least 1");
  auto vertex = [&](int c, int i) { return n + i * p + c; };
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (int x = n; x < n + 3 * p; ++x)
    for (int v = 0; v < n; ++v) pairs.emplace_back(v, x);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < p; ++c)
      for (int j = i; j < 3; ++j)
        for (int d = 0; d < p; ++d) {
          if (c == d || (j == i && d < c)) continue;
          pairs.emplace_back(vertex(c, i), vertex(d, j));
        }
  ReductionArtifact out;
  out.graph = Graph::from_edge_list(n + 3 * p, pairs);
  out.groups = {{"original", range(0, n)},
                {"K1", range(n, n + p)},
                {"K2", range(n + p, n + 2 * p)},
                {"K3", range(n + 2 * p, n + 3 * p)}};
  out.k = out.graph.edge_count() - (3 * choose2(p) + static_cast<long long>(p) * n);
  out.faithful = p == cube(n);
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, pairs);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& f) {
  if (n < 0 || n > 10) throw ContractError("labeled enumeration supports n <= 10");
  int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) f(graph_from_mask(n, mask));
}

std::vector<Graph> corpus(std::uint64_t seed, const CorpusSpec& spec) {
  if (spec.n < 0) throw ContractError("corpus needs n >= 0");
  std::vector<Graph> out;
  if (spec.family == "all") {
    if (spec.n > 7) throw ContractError("all-labeled corpus limited to n <= 7");
    for_each_labeled_graph(spec.n, [&](const Graph& g) { out.push_back(g); });
    return out;
  }
  if (spec.p < 0.0 || spec.p > 1.0) throw ContractError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  if (spec.family == "gnp") {
    for (int i = 0; i < spec.count; ++i) out.push_back(sample_gnp(rng, spec.n, spec.p).graph());
    return out;
  }
  if (spec.family == "hfree") {
    if (!spec.forbidden) throw ContractError("hfree corpus needs a forbidden pattern");
    long long attempts = 0;
    while (static_cast<int>(out.size()) < spec.count) {
      if (++attempts > 1000LL * std::max(1, spec.count))
        throw ResourceLimitError("hfree sampling did not converge");
      PairMatrix m = sample_gnp(rng, spec.n, spec.p);
      Graph g = m.graph();
      for (int step = 0; step < 4 * spec.n * spec.n; ++step) {
        auto w = find_induced(g, *spec.forbidden);
        if (!w) break;
        int k = static_cast<int>(w->size());
        int a = static_cast<int>(rng() % k);
        int b = static_cast<int>(rng() % (k - 1));
        if (b >= a) ++b;
        m.set((*w)[a], (*w)[b], !m.get((*w)[a], (*w)[b]));
        g = m.graph();
      }
      if (is_free_of(g, *spec.forbidden)) out.push_back(g);
    }
    return out;
  }
  throw ContractError("unknown corpus family '" + spec.family + "'");
}

}  // namespace stc
