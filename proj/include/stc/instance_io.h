#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "stc/generators.h"
#include "stc/graph.h"
#include "stc/kernels.h"
#include "stc/solve_result.h"

namespace stc {

inline constexpr int kSchemaVersion = 1;

/// Problem named by an instance header.
enum class Problem { Stc, Cd };
const char* problem_name(Problem p);
/// Throws ContractError unless token is "stc" or "cd".
Problem parse_problem(const std::string& token);

struct Instance {
  Problem problem = Problem::Stc;
  Graph graph;
};

/// Reads "p stc|cd n m", then m lines "e u v" (1-indexed). Lines starting
/// with 'c' and empty lines are skipped. Throws InputError with the line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Header plus one edge line per edge in edge order, no comments.
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

/// [[u,v],...] with 1-indexed endpoints.
nlohmann::json edge_list_json(const Graph& g, const std::vector<int>& edges);
nlohmann::json trace_json(const std::vector<TraceEntry>& trace);
/// Vertex groups (1-indexed) and budgets of a reduction artifact.
nlohmann::json artifact_json(const ReductionArtifact& a);

}  // namespace stc
