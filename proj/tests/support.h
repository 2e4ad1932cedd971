#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stc/graph.h"

namespace stc::test {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);  // center 0
Graph paw();             // triangle 0,1,2 plus pendant 3 on 2
Graph petersen();
Graph disjoint_union(const Graph& a, const Graph& b);
Graph rule1_demo();  // a-b, a-c, b-c, c-d on 0..3
Graph random_graph(std::mt19937_64& rng, int n, double p);
/// Same graph with vertices renamed by perm and edges listed in reverse.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Count of induced P3s by scanning every vertex triple.
int p3_count_by_triples(const Graph& g);
/// Isomorphism test for graphs on at most four vertices via sorted degree
/// sequences, which separate all such graphs.
bool small_isomorphic(const Graph& a, const Graph& b);
/// Does g contain an induced copy of h (|h| <= 4)? Uses small_isomorphic.
bool contains_induced_by_degrees(const Graph& g, const Graph& h);
/// Maximum matching size by exhaustive search over edge subsets.
int matching_number_brute(const Graph& g);
/// Largest clique by exhaustive vertex-subset search (n <= 20).
int clique_number_brute(const Graph& g);
/// Maximum strong count by checking every edge subset (m <= 20).
int stc_optimum_by_subsets(const Graph& g);
/// Maximum cluster edges by trying every deletion subset (m <= 20).
int cd_optimum_by_subsets(const Graph& g);

}  // namespace stc::test
