#pragma once

#include <optional>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/relaxation.hpp"

namespace lgc {

/// Edge sets driving the layered clustering. + edges that are fractionally
/// short, - edges that are fractionally long, and + edges of length zero.
struct EdgeClassification {
  std::vector<int> plus_bad;   // d < 1/sqrt(n), ties excluded
  std::vector<int> minus_bad;  // d > 1 - 1/sqrt(n), ties excluded
  std::vector<int> plus_zero;  // d <= tau; subset of plus_bad
};

EdgeClassification classify_edges(const SignedGraph& graph,
                                  const MetricSolution& metric);

/// Candidate guesses for the heaviest misclassified weight: 0 plus every
/// distinct edge weight, ascending.
std::vector<double> candidate_cmax_values(const SignedGraph& graph);

/// Layers of the 0/1 shortest-path metric on the bad-+ graph. distance is
/// -1 for vertices that are dead or unreachable from the source.
struct LayerDecomposition {
  int source = 0;
  std::vector<int> distance;
  std::vector<std::vector<int>> layers;  // layers[j] = vertices at distance j
};

/// 0/1 BFS over the plus_bad edges, length 0 on plus_zero edges and 1
/// otherwise. An empty live mask means all vertices are live.
LayerDecomposition zero_one_layers(const SignedGraph& graph,
                                   const EdgeClassification& classes,
                                   int source,
                                   const std::vector<char>& live = {});

/// Smallest j* <= (sqrt(n)-1)/2 whose three consecutive layers all have at
/// most 16*sqrt(n) vertices. Existence is guaranteed for n >= 4.
int choose_level_cut(const LayerDecomposition& layers, int n);

struct LayeredIteration {
  int pair_edge = -1;  // minus_bad edge whose endpoints were separated
  int source = -1;     // first endpoint of that edge, as stored
  LayerDecomposition layers;
  int j_star = -1;
  std::vector<int> cluster;  // emitted sphere
};

struct LayeredOutcome {
  bool feasible = false;  // false: the c_max guess pinned an infeasible LP
  std::optional<Clustering> clustering;
  std::optional<MetricSolution> metric;
  EdgeClassification classes;
  std::vector<EdgePin> pins;
  std::vector<LayeredIteration> iterations;
};

/// One guess of the layered clustering: solve the pinned relaxation, then
/// repeatedly cut level spheres between small layers until every bad -
/// pair is separated inside each component of the bad-+ graph.
LayeredOutcome layered_clustering(const SignedGraph& graph, double c_max);

struct MinMaxResult {
  Clustering clustering;
  double value = 0.0;
  double best_c_max = 0.0;
};

/// Runs layered_clustering for every candidate c_max and keeps the best
/// feasible output under the max-disagreement objective. Graphs with fewer
/// than 4 vertices fall back to the exact oracle. jobs > 1 evaluates
/// guesses in parallel; the result does not depend on jobs.
MinMaxResult solve_minmax(const SignedGraph& graph, int jobs = 1);

}  // namespace lgc
