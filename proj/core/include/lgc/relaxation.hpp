#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/lp.hpp"

namespace lgc {

/// Pin for one edge of the metric: 0 classifies a + edge correctly,
/// 1 classifies a - edge correctly.
struct EdgePin {
  int edge_index = 0;
  double value = 0.0;
};

/// Index of the d(u,v) variable among the n(n-1)/2 unordered pairs, in the
/// layout used by the relaxation builders.
int metric_pair_index(int n, int u, int v);

/// Metric LP for local disagreement minimization: variables d(u,v) on all
/// unordered pairs plus per-vertex fractional disagreements D(u), all
/// 3*C(n,3) canonical triangle rows, and for the max objective an auxiliary
/// scalar bounding every measured D(u). `measured` restricts which vertices
/// the aggregator sees (empty = all); the one-sided bipartite guarantee
/// needs the restriction.
LinearProgram build_disagreement_lp(const SignedGraph& graph,
                                    Aggregate objective,
                                    std::span<const EdgePin> pins = {},
                                    std::span<const int> measured = {});

/// Same metric variables with per-vertex fractional agreements A(u);
/// maximizes the smallest A(u).
LinearProgram build_agreements_lp(const SignedGraph& graph);

/// Fractional solution of the disagreement relaxation: a pseudometric on
/// the vertices plus the per-vertex disagreement it induces.
struct MetricSolution {
  int n = 0;
  std::vector<double> d;  // row-major n*n, symmetric, zero diagonal
  std::vector<double> fractional_disagreement;
  double objective_value = 0.0;

  double distance(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

struct AgreementsSolution {
  int n = 0;
  std::vector<double> d;
  std::vector<double> fractional_agreement;
  double objective_value = 0.0;

  double distance(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

/// Reads the metric out of a solved disagreement LP and verifies the
/// solution invariants: bounds, triangle inequalities within 1e-7, and
/// D(u) against its recomputation from d. Throws internal_error with the
/// offending triple or vertex otherwise.
MetricSolution extract_metric(const SignedGraph& graph, const LinearProgram& lp,
                              const LpSolution& solution);

AgreementsSolution extract_agreements(const SignedGraph& graph,
                                      const LinearProgram& lp,
                                      const LpSolution& solution);

/// Build + solve + extract; nullopt when the pinned LP is infeasible.
std::optional<MetricSolution> solve_disagreement_metric(
    const SignedGraph& graph, Aggregate objective,
    std::span<const EdgePin> pins = {}, std::span<const int> measured = {});

AgreementsSolution solve_agreements_metric(const SignedGraph& graph);

/// Pins for all edges heavier than c_max: + edges to 0, - edges to 1.
std::vector<EdgePin> heavy_edge_pins(const SignedGraph& graph, double c_max);

}  // namespace lgc
