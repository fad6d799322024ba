#pragma once

#include <span>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/relaxation.hpp"

namespace lgc {

/// Vertices of the live set strictly within the radius of the center.
/// Ties within 1e-9 of the radius are excluded; the charging arguments
/// need excluded vertices to sit at distance >= the inner radius.
std::vector<int> ball(const MetricSolution& metric, std::span<const int> live,
                      int center, double radius);

/// Greedy sphere cutting for complete graphs: repeatedly pick the center
/// with the most live vertices within 1/7 and cut its 3/7 sphere. For any
/// feasible metric of an unweighted complete instance the output satisfies
/// disagree(u) <= 7 D(u) for every vertex.
Clustering greedy_clustering_complete(const MetricSolution& metric);

/// Bipartite variant: centers come from live left vertices and are ranked
/// by live right vertices within 1/7; leftovers become singletons. The
/// 7 D(u) bound holds for the left side of unweighted complete bipartite
/// instances.
Clustering greedy_clustering_bipartite(const MetricSolution& metric,
                                       const BipartiteSides& sides);

}  // namespace lgc
