#ifndef UPDOM_TESTS_SUPPORT_CORPUS_H_
#define UPDOM_TESTS_SUPPORT_CORPUS_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "updom/graph.h"
#include "updom/model.h"

namespace updom::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Deterministic corpus of small graphs: complete, complete bipartite, paths,
// cycles, stars, edgeless graphs, small boards, generalized Petersen graphs,
// the J_3 flower snark, disjoint unions and seeded G(n, p) samples. Only
// graphs with n <= max_n are returned.
std::vector<NamedGraph> small_corpus(Vertex max_n);

// Uniform random simple graph with edge probability p.
Graph random_graph(std::mt19937_64& rng, Vertex n, double p);

Graph graph_from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

// Brute-force predicates written directly from the definitions with
// Graph::adjacent; independent of the bitmask kernels.
bool brute_dominating(const Graph& g, std::uint64_t mask);
// No proper subset of the set is dominating (checks all 2^|S| subsets).
bool brute_literal_minimal(const Graph& g, std::uint64_t mask);
bool brute_independent(const Graph& g, std::uint64_t mask);

std::set<std::vector<Vertex>> brute_minimal_dominating_sets(const Graph& g);
std::int64_t brute_upper_domination(const Graph& g);
std::int64_t brute_domination_number(const Graph& g);
std::int64_t brute_independence_number(const Graph& g);

// All vertex sets S for which the graph model `m` has a feasible assignment
// with x = indicator(S). For each x in {0,1}^n the remaining variables are
// split into blocks that share no row, and each block is enumerated
// exhaustively, so the result equals the decode() image of every feasible
// assignment. Requires small blocks (at most 20 variables each).
std::set<std::vector<Vertex>> feasible_decoded_sets(const LinearModel& m);

// Number of feasible assignments, counted exhaustively (2^#vars, so only
// for tiny models).
std::uint64_t count_feasible_assignments_bruteforce(const LinearModel& m,
                                                    std::set<std::vector<Vertex>>* decoded);

}  // namespace updom::testing

#endif  // UPDOM_TESTS_SUPPORT_CORPUS_H_
