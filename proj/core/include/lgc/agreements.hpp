#pragma once

#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

/// Weight-reduced instance for the non-oblivious local search. c* is the
/// smallest total incident weight; T collects the vertices sitting exactly
/// at c*; no surviving edge has both endpoints outside T.
struct ReducedInstance {
  SignedGraph graph;
  std::vector<char> in_t;
  double c_star = 0.0;
};

/// Reduces edge weights between non-T vertices until each such edge either
/// vanishes or pushes an endpoint down to c*. Weights only decrease and c*
/// is preserved.
ReducedInstance reduce_weights(const SignedGraph& graph);

struct FlipRecord {
  int iteration = 0;
  int vertex = 0;
  double potential = 0.0;  // after the flip
};

struct LocalSearchResult {
  Clustering clustering;  // the 2-cut {S, V \ S}
  std::vector<char> s_side;
  int iterations = 0;
  double initial_potential = 0.0;
  std::vector<FlipRecord> trace;
};

/// Sum of agreements of the 2-clustering induced by s_side.
double cut_potential(const SignedGraph& graph, const std::vector<char>& s_side);

/// Flips the lowest violating vertex until every agreement reaches
/// (1/2 - epsilon) c* on the reduced graph. Each flip raises the potential
/// by at least 4 epsilon c*, so at most n/(2 epsilon) flips happen.
LocalSearchResult non_oblivious_local_search(const ReducedInstance& reduced,
                                             double epsilon,
                                             const std::vector<char>& s0);

struct MaxMinResult {
  Clustering clustering;
  double value = 0.0;       // min agreement on the original graph
  double c_star = 0.0;
  double epsilon_internal = 0.0;
  double certificate = 0.0;  // (1/2 - eps_internal) * c_star
  LocalSearchResult search;
  ReducedInstance reduced;
};

/// Max min agreements via weight reduction + non-oblivious local search.
/// The caller's epsilon is the approximation slack: the returned value is
/// at least opt / (2 + epsilon).
MaxMinResult solve_maxmin_agreements(const SignedGraph& graph, double epsilon);

}  // namespace lgc
