#include "stc/instance_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "stc/errors.h"

namespace stc {

namespace {

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
    if (v > 100000000) return false;
  }
  out = v;
  return true;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

const char* problem_name(Problem p) { return p == Problem::Stc ? "stc" : "cd"; }

Problem parse_problem(const std::string& token) {
  if (token == "stc") return Problem::Stc;
  if (token == "cd") return Problem::Cd;
  throw ContractError("unknown problem '" + token + "' (expected stc or cd)");
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<long long, long long>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::vector<std::string> tok = split(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (header) throw InputError("second header line", lineno);
      if (tok.size() != 4) throw InputError("header must be 'p stc|cd n m'", lineno);
      if (tok[1] == "stc")
        inst.problem = Problem::Stc;
      else if (tok[1] == "cd")
        inst.problem = Problem::Cd;
      else
        throw InputError("unknown problem '" + tok[1] + "' in header", lineno);
      if (!parse_int(tok[2], n) || !parse_int(tok[3], m)) throw InputError("bad vertex or edge count", lineno);
      header = true;
    } else if (tok[0] == "e") {
      if (!header) throw InputError("edge line before header", lineno);
      long long u = 0, v = 0;
      if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
        throw InputError("edge line must be 'e u v'", lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw InputError("vertex out of range 1.." + std::to_string(n), lineno);
      if (u == v) throw InputError("self-loop on vertex " + std::to_string(u), lineno);
      if (static_cast<long long>(pairs.size()) >= m)
        throw InputError("more edge lines than the declared " + std::to_string(m), lineno);
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno);
      pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw InputError("unrecognized line type '" + tok[0] + "'", lineno);
    }
  }
  if (!header) throw InputError("missing header line", lineno + 1);
  if (static_cast<long long>(pairs.size()) != m)
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()), lineno + 1);
  inst.graph = Graph::from_edge_list(static_cast<int>(n), pairs);
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "p " << problem_name(inst.problem) << ' ' << inst.graph.vertex_count() << ' ' << inst.graph.edge_count()
      << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_instance(out, inst);
}

nlohmann::json edge_list_json(const Graph& g, const std::vector<int>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : edges) out.push_back({g.edge(e).u + 1, g.edge(e).v + 1});
  return out;
}

nlohmann::json trace_json(const std::vector<TraceEntry>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const TraceEntry& t : trace) {
    nlohmann::json removed = nlohmann::json::array();
    for (int v : t.removed) removed.push_back(v + 1);
    out.push_back({{"rule", t.rule}, {"removed", removed}, {"budget_delta", t.budget_delta}});
  }
  return out;
}

nlohmann::json artifact_json(const ReductionArtifact& a) {
  nlohmann::json groups = nlohmann::json::object();
  for (const VertexGroup& g : a.groups) {
    nlohmann::json vs = nlohmann::json::array();
    for (int v : g.vertices) vs.push_back(v + 1);
    groups[g.name] = vs;
  }
  nlohmann::json out = {{"schema_version", kSchemaVersion},
                        {"vertices", a.graph.vertex_count()},
                        {"edges", a.graph.edge_count()},
                        {"faithful", a.faithful},
                        {"groups", groups}};
  out["k"] = a.k ? nlohmann::json(*a.k) : nlohmann::json(nullptr);
  out["ell"] = a.ell ? nlohmann::json(*a.ell) : nlohmann::json(nullptr);
  return out;
}

}  // namespace stc
