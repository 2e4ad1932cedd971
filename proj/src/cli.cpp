#include "stc/cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stc/errors.h"
#include "stc/gallai.h"
#include "stc/generators.h"
#include "stc/instance_io.h"
#include "stc/kernels.h"
#include "stc/oracle.h"
#include "stc/solvers_ell.h"
#include "stc/solvers_k.h"
#include "stc/special_cases.h"

namespace stc {

namespace {

using nlohmann::json;

struct SolveArgs {
  std::string problem;
  std::string input;
  int k = -1;
  int ell = -1;
  bool optimal = false;
  bool no_kernel = false;
  bool trace = false;
  bool automatic = false;
};

struct KernelArgs {
  std::string problem;
  std::string input;
  int k = -1;
  int ell = -1;
  std::string output;
};

struct GenerateArgs {
  std::string family;
  std::string out_dir = ".";
  int n = 6;
  double p = 0.5;
  int count = 1;
  std::uint64_t seed = 1;
  std::string pattern;
  std::string input;
  int padding = 0;
  int t = 0;
  std::string cover;
  std::string problem = "stc";
};

json base(const char* command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

json certificate_json(const Graph& g, const SolveResult& r) {
  if (!r.certificate) return nullptr;
  return {{"strong", edge_list_json(g, r.certificate->strong_edges())},
          {"weak", edge_list_json(g, r.certificate->weak_edges())}};
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  int modes = (a.k >= 0) + (a.ell >= 0) + (a.optimal ? 1 : 0);
  if (modes != 1) throw ContractError("solve needs exactly one of --k, --ell, --optimal");
  Problem prob = parse_problem(a.problem);
  Instance inst = read_instance_file(a.input);
  const Graph& g = inst.graph;
  std::string mode = a.k >= 0 ? "k" : (a.ell >= 0 ? "ell" : "optimal");

  SolveResult r;
  bool done = false;
  json dispatched = nullptr;
  if (a.automatic) {
    SolverTag tag = dispatch(g);
    dispatched = solver_tag_name(tag);
    if (tag != SolverTag::Exponential) {
      r = solve_special(g, tag);
      if (mode == "k") r.feasible = r.weak <= a.k;
      if (mode == "ell") r.feasible = r.strong >= a.ell;
      done = true;
    }
  }
  if (!done) {
    StcKOptions opt;
    opt.kernelize = !a.no_kernel;
    if (prob == Problem::Stc) {
      if (mode == "k") r = solve_stc_k(g, a.k, opt);
      if (mode == "ell") r = solve_stc_ell(g, a.ell);
      if (mode == "optimal") r = solve_stc_min_weak(g, opt);
    } else {
      if (mode == "k") r = solve_cd_k(g, a.k);
      if (mode == "ell") r = solve_cd_ell(g, a.ell);
      if (mode == "optimal") r = solve_cd_min_deletions(g);
    }
  }
  if (!r.feasible) r.certificate.reset();

  json j = base("solve");
  j["problem"] = problem_name(prob);
  j["parameterization"] = mode;
  j["budget"] = mode == "k" ? json(a.k) : (mode == "ell" ? json(a.ell) : json(nullptr));
  j["verdict"] = r.feasible ? "yes" : "no";
  j["objective"] = !r.feasible ? json(nullptr) : json(mode == "ell" ? r.strong : r.weak);
  j["strong"] = r.feasible ? json(r.strong) : json(nullptr);
  j["weak"] = r.feasible ? json(r.weak) : json(nullptr);
  j["certificate"] = certificate_json(g, r);
  j["solver"] = r.solver;
  if (a.automatic) j["dispatch"] = dispatched;
  if (a.trace) j["trace"] = trace_json(r.trace);
  j["stats"] = {{"nodes", r.stats.nodes}, {"rules_fired", r.stats.rules_fired}};
  j["timing"] = {{"wall_ms", r.stats.wall_ms}};
  out << j.dump(2) << '\n';

  err << problem_name(prob) << ' ' << mode;
  if (mode != "optimal") err << '=' << (mode == "k" ? a.k : a.ell);
  err << ": " << (r.feasible ? "yes" : "no");
  if (r.feasible) err << " (" << r.strong << " strong, " << r.weak << " weak)";
  err << " via " << r.solver << " in " << std::fixed << std::setprecision(2) << r.stats.wall_ms << " ms\n";
  return kExitOk;
}

int cmd_kernelize(const KernelArgs& a, std::ostream& out, std::ostream& err) {
  if ((a.k >= 0) + (a.ell >= 0) != 1) throw ContractError("kernelize needs exactly one of --k, --ell");
  if (parse_problem(a.problem) != Problem::Stc)
    throw ContractError("kernelization rules are implemented for stc only");
  Instance inst = read_instance_file(a.input);
  bool by_k = a.k >= 0;
  ReducedInstance ri = by_k ? kernelize_k(inst.graph, a.k) : rule2_apply(inst.graph, a.ell);
  Instance reduced{Problem::Stc, ri.graph};

  json j = base("kernelize");
  j["problem"] = "stc";
  j["parameterization"] = by_k ? "k" : "ell";
  j["budget_in"] = by_k ? a.k : a.ell;
  j["budget"] = ri.budget;
  j["k_decrease"] = ri.k_decrease;
  j["verdict"] = verdict_name(ri.verdict);
  j["reason"] = ri.reason.empty() ? json(nullptr) : json(ri.reason);
  j["vertices"] = ri.graph.vertex_count();
  j["edges"] = ri.graph.edge_count();
  json map = json::array();
  for (int v : ri.vertex_map) map.push_back(v + 1);
  j["vertex_map"] = map;
  j["trace"] = trace_json(ri.trace);
  if (ri.partition)
    j["partition"] = {{"matched", ri.partition->matched},
                      {"two_sided", ri.partition->two_sided},
                      {"one_sided", ri.partition->one_sided}};
  if (!by_k && ri.verdict != Verdict::Yes) j["size_bound_ok"] = kernel_size_bound_check(ri, a.ell);
  j["instance"] = instance_to_string(reduced);
  if (!a.output.empty()) write_instance_file(a.output, reduced);
  out << j.dump(2) << '\n';
  err << "kernel: " << ri.graph.vertex_count() << " vertices, " << ri.graph.edge_count() << " edges, budget "
      << ri.budget << ", verdict " << verdict_name(ri.verdict) << '\n';
  return kExitOk;
}

int cmd_recognize(const std::string& input, std::ostream& out, std::ostream& err) {
  Instance inst = read_instance_file(input);
  json patterns = json::object();
  int contained = 0;
  for (const PatternInfo& info : pattern_catalog()) {
    auto w = find_induced(inst.graph, info.id);
    json entry = {{"free", !w.has_value()}};
    if (w) {
      json wit = json::array();
      for (int v : *w) wit.push_back(v + 1);
      entry["witness"] = wit;
      ++contained;
    } else {
      entry["witness"] = nullptr;
    }
    patterns[info.token] = entry;
  }
  json j = base("recognize");
  j["vertices"] = inst.graph.vertex_count();
  j["edges"] = inst.graph.edge_count();
  j["patterns"] = patterns;
  j["dispatch"] = solver_tag_name(dispatch(inst.graph));
  out << j.dump(2) << '\n';
  err << "contains " << contained << " of " << pattern_catalog().size() << " patterns\n";
  return kExitOk;
}

int cmd_compare(const std::string& input, std::ostream& out, std::ostream& err) {
  Instance inst = read_instance_file(input);
  CorrespondenceReport rep = correspondence_check(inst.graph, OracleBudget::from_environment());
  json j = base("compare");
  j["stc"] = rep.stc_opt;
  j["cd"] = rep.cd_opt;
  j["corresponds"] = rep.corresponds;
  out << j.dump(2) << '\n';
  err << "stc optimum " << rep.stc_opt << " strong, cd optimum " << rep.cd_opt << " cluster edges\n";
  return kExitOk;
}

std::vector<int> parse_vertex_list(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1 || v > n) throw ContractError("bad vertex '" + tok + "' in list");
    out.push_back(v - 1);
  }
  return out;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  fs::create_directories(a.out_dir);
  Problem prob = parse_problem(a.problem);
  json files = json::array();
  auto emit = [&](const std::string& name, const Graph& g) {
    std::string path = (fs::path(a.out_dir) / (name + ".gr")).string();
    write_instance_file(path, {prob, g});
    files.push_back(path);
  };
  auto sidecar = [&](const std::string& name, const json& meta) {
    std::string path = (fs::path(a.out_dir) / (name + ".json")).string();
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << meta.dump(2) << '\n';
    files.push_back(path);
  };
  auto source = [&]() {
    if (a.input.empty()) throw ContractError("family '" + a.family + "' needs --input");
    return read_instance_file(a.input).graph;
  };
  std::optional<int> padding = a.padding > 0 ? std::optional<int>(a.padding) : std::nullopt;

  if (a.family == "gnp" || a.family == "hfree" || a.family == "all") {
    CorpusSpec spec{a.family, a.n, a.p, a.count, std::nullopt};
    if (a.family == "hfree") spec.forbidden = parse_pattern(a.pattern);
    std::vector<Graph> graphs = corpus(a.seed, spec);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::ostringstream name;
      name << a.family << '-' << std::setw(4) << std::setfill('0') << i;
      emit(name.str(), graphs[i]);
    }
    sidecar(a.family, {{"schema_version", kSchemaVersion},
                       {"family", a.family},
                       {"seed", a.seed},
                       {"n", a.n},
                       {"p", a.p},
                       {"count", graphs.size()},
                       {"pattern", a.pattern.empty() ? json(nullptr) : json(a.pattern)}});
  } else if (a.family == "fig3") {
    auto [ga, gb] = fig3_graphs();
    emit("fig3a", ga);
    emit("fig3b", gb);
  } else if (a.family == "expanded") {
    ReductionArtifact art = expanded_graph(source(), padding);
    emit("expanded", art.graph);
    json meta = artifact_json(art);
    if (a.t > 0) meta["k"] = expanded_budget(art, a.t);
    sidecar("expanded", meta);
  } else if (a.family == "rmc") {
    Graph g = source();
    VertexSet cover = VertexSet::from(g.vertex_count(), parse_vertex_list(a.cover, g.vertex_count()));
    ReductionArtifact rmc = clique_vc_to_rmc(g, cover, a.t);
    emit("rmc", rmc.graph);
    sidecar("rmc", artifact_json(rmc));
    std::vector<std::vector<int>> classes;
    for (const VertexGroup& grp : rmc.groups) classes.push_back(grp.vertices);
    ReductionArtifact st = rmc_to_stc(rmc.graph, classes);
    emit("rmc_stc", st.graph);
    sidecar("rmc_stc", artifact_json(st));
  } else if (a.family == "coclaw") {
    ReductionArtifact art = three_clique_cover_to_coclaw(source(), padding);
    emit("coclaw", art.graph);
    sidecar("coclaw", artifact_json(art));
  } else {
    throw ContractError("unknown family '" + a.family + "'");
  }
  json j = base("generate");
  j["family"] = a.family;
  j["files"] = files;
  out << j.dump(2) << '\n';
  err << "wrote " << files.size() << " files to " << a.out_dir << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& result_path, std::ostream& out, std::ostream& err) {
  Instance inst = read_instance_file(input);
  const Graph& g = inst.graph;
  std::ifstream f(result_path);
  if (!f) throw InputError("cannot open '" + result_path + "'");
  json r;
  try {
    r = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("result is not valid JSON: ") + e.what());
  }
  json j = base("verify");
  auto finish = [&](bool valid, const std::string& reason) {
    j["valid"] = valid;
    j["reason"] = reason;
    out << j.dump(2) << '\n';
    err << (valid ? "certificate valid" : "certificate INVALID: " + reason) << '\n';
    return valid ? kExitOk : kExitError;
  };
  if (!r.contains("problem") || !r.contains("certificate")) return finish(false, "result lacks problem or certificate");
  Problem prob = parse_problem(r["problem"].get<std::string>());
  if (r["certificate"].is_null()) {
    j["certificate_present"] = false;
    return finish(r.value("verdict", "") == "no", "no certificate to check");
  }
  j["certificate_present"] = true;
  auto indices = [&](const json& list, std::vector<int>& outv) {
    for (const json& pair : list) {
      int u = pair.at(0).get<int>() - 1;
      int v = pair.at(1).get<int>() - 1;
      auto e = (u >= 0 && v >= 0 && u < g.vertex_count() && v < g.vertex_count()) ? g.edge_index(u, v)
                                                                                     : std::nullopt;
      if (!e) return false;
      outv.push_back(*e);
    }
    return true;
  };
  std::vector<int> strong, weak;
  if (!indices(r["certificate"]["strong"], strong) || !indices(r["certificate"]["weak"], weak))
    return finish(false, "certificate names a pair that is not an edge");
  Labeling l;
  try {
    l = Labeling::from_partition(g.edge_count(), strong, weak);
  } catch (const ContractError& e) {
    return finish(false, e.what());
  }
  if (r.contains("strong") && r["strong"].is_number() && r["strong"].get<int>() != l.strong_count())
    return finish(false, "strong count does not match certificate");
  if (r.contains("weak") && r["weak"].is_number() && r["weak"].get<int>() != l.weak_count())
    return finish(false, "weak count does not match certificate");
  if (prob == Problem::Stc && !is_stc_labeling(g, l)) return finish(false, "strong edges contain an induced P3");
  if (prob == Problem::Cd && !is_cluster_labeling(g, l)) return finish(false, "strong edges are not a cluster graph");
  return finish(true, "ok");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for strong triadic closure and cluster deletion", "stc"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve an instance for a budget or to optimality");
  solve->add_option("problem", sa.problem, "stc or cd")->required();
  solve->add_option("input", sa.input, "instance file")->required();
  solve->add_option("--k", sa.k, "maximum number of weak edges / deletions")->check(CLI::NonNegativeNumber);
  solve->add_option("--ell", sa.ell, "minimum number of strong / cluster edges")->check(CLI::NonNegativeNumber);
  solve->add_flag("--optimal", sa.optimal, "minimize the number of weak edges / deletions");
  solve->add_flag("--no-kernel", sa.no_kernel, "skip kernelization before the stc k-solver");
  solve->add_flag("--trace", sa.trace, "include the kernelization trace");
  solve->add_flag("--auto", sa.automatic, "use a polynomial solver when the graph class allows it");

  KernelArgs ka;
  auto* kern = app.add_subcommand("kernelize", "Apply the reduction rules");
  kern->add_option("problem", ka.problem, "stc")->required();
  kern->add_option("input", ka.input, "instance file")->required();
  kern->add_option("--k", ka.k, "weak-edge budget (closed critical clique rule)")->check(CLI::NonNegativeNumber);
  kern->add_option("--ell", ka.ell, "strong-edge target (family rule)")->check(CLI::NonNegativeNumber);
  kern->add_option("--output", ka.output, "write the reduced instance here");

  std::string rec_input;
  auto* rec = app.add_subcommand("recognize", "Report which 3- and 4-vertex patterns occur induced");
  rec->add_option("input", rec_input, "instance file")->required();

  std::string cmp_input;
  auto* cmp = app.add_subcommand("compare", "Brute-force optima of both problems");
  cmp->add_option("input", cmp_input, "instance file")->required();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Write corpus or reduction instances");
  gen->add_option("family", ga.family, "gnp, hfree, all, fig3, expanded, rmc, coclaw")->required();
  gen->add_option("--out", ga.out_dir, "output directory");
  gen->add_option("--n", ga.n, "vertex count")->check(CLI::NonNegativeNumber);
  gen->add_option("--p", ga.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--count", ga.count, "number of graphs")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", ga.seed, "random seed");
  gen->add_option("--pattern", ga.pattern, "forbidden pattern for hfree");
  gen->add_option("--input", ga.input, "source instance for reductions");
  gen->add_option("--padding", ga.padding, "padding override (non-faithful)")->check(CLI::PositiveNumber);
  gen->add_option("--t", ga.t, "clique size for expanded budgets and rmc");
  gen->add_option("--cover", ga.cover, "comma-separated 1-indexed vertex cover for rmc");
  gen->add_option("--problem", ga.problem, "header problem of written instances");

  std::string ver_input, ver_result;
  auto* ver = app.add_subcommand("verify", "Check a solve result against its instance");
  ver->add_option("input", ver_input, "instance file")->required();
  ver->add_option("result", ver_result, "JSON written by solve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(sa, out, err);
    if (kern->parsed()) return cmd_kernelize(ka, out, err);
    if (rec->parsed()) return cmd_recognize(rec_input, out, err);
    if (cmp->parsed()) return cmd_compare(cmp_input, out, err);
    if (gen->parsed()) return cmd_generate(ga, out, err);
    if (ver->parsed()) return cmd_verify(ver_input, ver_result, out, err);
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace stc
