#include "lgc/agreements.hpp"

#include <algorithm>
#include <cmath>

#include "lgc/errors.hpp"

namespace lgc {

namespace {
constexpr double kGuardSlack = 1e-9;

std::vector<double> cut_agreements(const SignedGraph& graph,
                                   const std::vector<char>& s_side) {
  std::vector<double> agree(graph.vertex_count(), 0.0);
  for (const SignedEdge& e : graph.edges()) {
    bool together = s_side[e.u] == s_side[e.v];
    bool right = e.sign == Sign::plus ? together : !together;
    if (right) {
      agree[e.u] += e.weight;
      agree[e.v] += e.weight;
    }
  }
  return agree;
}

Clustering cut_clustering(const std::vector<char>& s_side) {
  std::vector<int> raw(s_side.size());
  for (std::size_t u = 0; u < s_side.size(); ++u) raw[u] = s_side[u] ? 1 : 0;
  return Clustering::from_labels(raw);
}

}  // namespace

ReducedInstance reduce_weights(const SignedGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<double> c = total_incident_weight(graph);
  double c_star = *std::min_element(c.begin(), c.end());
  std::vector<char> in_t(n, 0);
  for (int u = 0; u < n; ++u) in_t[u] = c[u] <= c_star;

  std::vector<SignedEdge> edges = graph.edges();
  std::vector<SignedEdge> kept;
  kept.reserve(edges.size());
  for (SignedEdge e : edges) {
    if (!in_t[e.u] && !in_t[e.v]) {
      // one closed-form step reproduces the continuous decrease: stop at
      // whichever of the three events fires first
      double slack_u = c[e.u] - c_star;
      double slack_v = c[e.v] - c_star;
      double delta = std::min({e.weight, slack_u, slack_v});
      e.weight = delta >= e.weight ? 0.0 : e.weight - delta;
      c[e.u] = delta >= slack_u ? c_star : c[e.u] - delta;
      c[e.v] = delta >= slack_v ? c_star : c[e.v] - delta;
      if (c[e.u] <= c_star) in_t[e.u] = 1;
      if (c[e.v] <= c_star) in_t[e.v] = 1;
    }
    if (e.weight > 0.0) kept.push_back(e);
  }
  return {SignedGraph(n, std::move(kept)), std::move(in_t), c_star};
}

double cut_potential(const SignedGraph& graph,
                     const std::vector<char>& s_side) {
  if (static_cast<int>(s_side.size()) != graph.vertex_count())
    throw contract_error("cut side vector does not match the graph");
  std::vector<double> agree = cut_agreements(graph, s_side);
  double phi = 0.0;
  for (double a : agree) phi += a;
  return phi;
}

LocalSearchResult non_oblivious_local_search(const ReducedInstance& reduced,
                                             double epsilon,
                                             const std::vector<char>& s0) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw contract_error("epsilon must lie in (0, 1/2)");
  const SignedGraph& graph = reduced.graph;
  const int n = graph.vertex_count();
  if (static_cast<int>(s0.size()) != n)
    throw contract_error("initial cut does not match the graph");

  const double target = (0.5 - epsilon) * reduced.c_star;
  const int iteration_cap =
      static_cast<int>(std::ceil(n / (2.0 * epsilon))) + 1;

  LocalSearchResult out{cut_clustering(s0), s0, 0, 0.0, {}};
  std::vector<double> agree = cut_agreements(graph, out.s_side);
  for (double a : agree) out.initial_potential += a;

  while (true) {
    int mover = -1;
    for (int u = 0; u < n; ++u) {
      if (agree[u] < target - kGuardSlack) {
        mover = u;
        break;
      }
    }
    if (mover < 0) break;
    if (out.iterations >= iteration_cap)
      throw internal_error("local search exceeded the n/(2 eps) bound");
    out.s_side[mover] = !out.s_side[mover];
    agree = cut_agreements(graph, out.s_side);
    double phi = 0.0;
    for (double a : agree) phi += a;
    ++out.iterations;
    out.trace.push_back({out.iterations, mover, phi});
  }
  out.clustering = cut_clustering(out.s_side);
  return out;
}

MaxMinResult solve_maxmin_agreements(const SignedGraph& graph, double epsilon) {
  if (!(epsilon > 0.0)) throw contract_error("epsilon must be positive");
  // epsilon = 4 e / (1 - 2 e) links the approximation slack to the search
  // threshold; invert it for the internal value.
  const double eps_internal = epsilon / (4.0 + 2.0 * epsilon);

  ReducedInstance reduced = reduce_weights(graph);
  LocalSearchResult search = non_oblivious_local_search(
      reduced, eps_internal, std::vector<char>(graph.vertex_count(), 0));

  // restoring the original weights can only grow agreements
  double value = evaluate_objective(
      Aggregate::min, agreement_vector(graph, search.clustering));
  double certificate = (0.5 - eps_internal) * reduced.c_star;
  Clustering clustering = search.clustering;
  return {std::move(clustering), value,          reduced.c_star,
          eps_internal,          certificate,    std::move(search),
          std::move(reduced)};
}

}  // namespace lgc
