#include "lgc/relaxation.hpp"

#include <cmath>
#include <string>

#include "lgc/errors.hpp"

namespace lgc {

namespace {

constexpr double kTau = 1e-7;  // solver tolerance shared by all checks

std::string pair_name(const char* prefix, int u, int v) {
  return std::string(prefix) + "_" + std::to_string(u) + "_" +
         std::to_string(v);
}

// d variables for all unordered pairs, in pair-index order.
void add_metric_variables(LinearProgram& lp, int n) {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) lp.add_variable(pair_name("d", u, v), 0.0, 1.0);
}

void add_triangle_rows(LinearProgram& lp, int n) {
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        int uv = metric_pair_index(n, u, v);
        int uw = metric_pair_index(n, u, w);
        int vw = metric_pair_index(n, v, w);
        std::string base = "tri_" + std::to_string(u) + "_" +
                           std::to_string(v) + "_" + std::to_string(w);
        lp.add_constraint(base + "_a",
                          {{uv, 1.0}, {vw, 1.0}, {uw, -1.0}}, Relation::ge, 0.0);
        lp.add_constraint(base + "_b",
                          {{uv, 1.0}, {uw, 1.0}, {vw, -1.0}}, Relation::ge, 0.0);
        lp.add_constraint(base + "_c",
                          {{uw, 1.0}, {vw, 1.0}, {uv, -1.0}}, Relation::ge, 0.0);
      }
    }
  }
}

void apply_pins(LinearProgram& lp, const SignedGraph& graph,
                std::span<const EdgePin> pins) {
  for (const EdgePin& pin : pins) {
    if (pin.edge_index < 0 || pin.edge_index >= graph.edge_count())
      throw contract_error("pin on nonexistent edge");
    const SignedEdge& e = graph.edge(pin.edge_index);
    if (pin.value == 0.0 && e.sign != Sign::plus)
      throw contract_error("pin 0 is only valid on + edges");
    if (pin.value == 1.0 && e.sign != Sign::minus)
      throw contract_error("pin 1 is only valid on - edges");
    if (pin.value != 0.0 && pin.value != 1.0)
      throw contract_error("pin value must be 0 or 1");
    lp.restrict_bounds(metric_pair_index(graph.vertex_count(), e.u, e.v),
                       pin.value, pin.value);
  }
}

std::vector<int> all_vertices(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

int metric_pair_index(int n, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw contract_error("pair index needs two distinct vertices");
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

LinearProgram build_disagreement_lp(const SignedGraph& graph,
                                    Aggregate objective,
                                    std::span<const EdgePin> pins,
                                    std::span<const int> measured) {
  if (objective != Aggregate::max && objective != Aggregate::sum)
    throw contract_error("disagreement objective must be max or sum");
  const int n = graph.vertex_count();
  std::vector<int> measure(measured.begin(), measured.end());
  if (measure.empty()) measure = all_vertices(n);
  for (int u : measure)
    if (u < 0 || u >= n) throw contract_error("measured vertex out of range");

  LinearProgram lp;
  add_metric_variables(lp, n);
  apply_pins(lp, graph, pins);

  const int d_count = n * (n - 1) / 2;
  for (int u = 0; u < n; ++u)
    lp.add_variable("D_" + std::to_string(u), 0.0, kInfinity);

  for (int u = 0; u < n; ++u) {
    std::vector<LinearTerm> terms;
    double rhs = 0.0;
    for (int e : graph.incident(u)) {
      const SignedEdge& edge = graph.edge(e);
      int idx = metric_pair_index(n, edge.u, edge.v);
      if (edge.sign == Sign::plus) {
        terms.push_back({idx, edge.weight});
      } else {
        terms.push_back({idx, -edge.weight});
        rhs -= edge.weight;
      }
    }
    terms.push_back({d_count + u, -1.0});
    lp.add_constraint("deg_" + std::to_string(u), std::move(terms),
                      Relation::eq, rhs);
  }

  add_triangle_rows(lp, n);

  if (objective == Aggregate::max) {
    int t = lp.add_variable("t", 0.0, kInfinity);
    for (int u : measure)
      lp.add_constraint("cap_" + std::to_string(u),
                        {{d_count + u, 1.0}, {t, -1.0}}, Relation::le, 0.0);
    lp.set_objective_coefficient(t, 1.0);
  } else {
    for (int u : measure) lp.set_objective_coefficient(d_count + u, 1.0);
  }
  lp.set_sense(Sense::minimize);
  return lp;
}

LinearProgram build_agreements_lp(const SignedGraph& graph) {
  const int n = graph.vertex_count();
  LinearProgram lp;
  add_metric_variables(lp, n);

  const int d_count = n * (n - 1) / 2;
  for (int u = 0; u < n; ++u)
    lp.add_variable("A_" + std::to_string(u), 0.0, kInfinity);

  for (int u = 0; u < n; ++u) {
    std::vector<LinearTerm> terms;
    double rhs = 0.0;
    for (int e : graph.incident(u)) {
      const SignedEdge& edge = graph.edge(e);
      int idx = metric_pair_index(n, edge.u, edge.v);
      if (edge.sign == Sign::plus) {
        terms.push_back({idx, -edge.weight});
        rhs -= edge.weight;
      } else {
        terms.push_back({idx, edge.weight});
      }
    }
    terms.push_back({d_count + u, -1.0});
    lp.add_constraint("agr_" + std::to_string(u), std::move(terms),
                      Relation::eq, rhs);
  }

  add_triangle_rows(lp, n);

  int t = lp.add_variable("t", 0.0, kInfinity);
  for (int u = 0; u < n; ++u)
    lp.add_constraint("cap_" + std::to_string(u),
                      {{d_count + u, 1.0}, {t, -1.0}}, Relation::ge, 0.0);
  lp.set_objective_coefficient(t, 1.0);
  lp.set_sense(Sense::maximize);
  return lp;
}

namespace {

// Shared by both extractors: reads the pair variables into a symmetric
// matrix and validates bounds and triangle inequalities.
std::vector<double> extract_distance_matrix(int n, const LpSolution& solution) {
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double value = solution.values[metric_pair_index(n, u, v)];
      if (value < -kTau || value > 1.0 + kTau)
        throw internal_error("metric value out of [0,1] at pair (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
      value = std::min(1.0, std::max(0.0, value));
      d[static_cast<std::size_t>(u) * n + v] = value;
      d[static_cast<std::size_t>(v) * n + u] = value;
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        double uv = d[static_cast<std::size_t>(u) * n + v];
        double uw = d[static_cast<std::size_t>(u) * n + w];
        double vw = d[static_cast<std::size_t>(v) * n + w];
        if (uv + vw < uw - kTau || uv + uw < vw - kTau || uw + vw < uv - kTau)
          throw internal_error("triangle inequality violated on (" +
                               std::to_string(u) + "," + std::to_string(v) +
                               "," + std::to_string(w) + ")");
      }
  return d;
}

void check_vertex_recomputation(const SignedGraph& graph,
                                const std::vector<double>& d,
                                const std::vector<double>& stored,
                                bool agreements) {
  const int n = graph.vertex_count();
  std::vector<double> c = total_incident_weight(graph);
  for (int u = 0; u < n; ++u) {
    double expect = 0.0;
    for (int e : graph.incident(u)) {
      const SignedEdge& edge = graph.edge(e);
      double duv = d[static_cast<std::size_t>(edge.u) * n + edge.v];
      bool long_side = agreements ? edge.sign == Sign::minus
                                  : edge.sign == Sign::plus;
      expect += edge.weight * (long_side ? duv : 1.0 - duv);
    }
    if (std::fabs(expect - stored[u]) > kTau * (1.0 + c[u]))
      throw internal_error("fractional value mismatch at vertex " +
                           std::to_string(u));
  }
}

}  // namespace

MetricSolution extract_metric(const SignedGraph& graph, const LinearProgram& lp,
                              const LpSolution& solution) {
  const int n = graph.vertex_count();
  const int d_count = n * (n - 1) / 2;
  if (solution.status != SolveStatus::optimal)
    throw contract_error("extract_metric needs an optimal solution");
  if (lp.variable_count() < d_count + n ||
      static_cast<int>(solution.values.size()) != lp.variable_count())
    throw contract_error("solution does not match the relaxation layout");

  MetricSolution out;
  out.n = n;
  out.d = extract_distance_matrix(n, solution);
  out.fractional_disagreement.assign(solution.values.begin() + d_count,
                                     solution.values.begin() + d_count + n);
  out.objective_value = solution.objective;
  check_vertex_recomputation(graph, out.d, out.fractional_disagreement, false);
  return out;
}

AgreementsSolution extract_agreements(const SignedGraph& graph,
                                      const LinearProgram& lp,
                                      const LpSolution& solution) {
  const int n = graph.vertex_count();
  const int d_count = n * (n - 1) / 2;
  if (solution.status != SolveStatus::optimal)
    throw contract_error("extract_agreements needs an optimal solution");
  if (lp.variable_count() < d_count + n ||
      static_cast<int>(solution.values.size()) != lp.variable_count())
    throw contract_error("solution does not match the relaxation layout");

  AgreementsSolution out;
  out.n = n;
  out.d = extract_distance_matrix(n, solution);
  out.fractional_agreement.assign(solution.values.begin() + d_count,
                                  solution.values.begin() + d_count + n);
  out.objective_value = solution.objective;
  check_vertex_recomputation(graph, out.d, out.fractional_agreement, true);
  return out;
}

std::optional<MetricSolution> solve_disagreement_metric(
    const SignedGraph& graph, Aggregate objective, std::span<const EdgePin> pins,
    std::span<const int> measured) {
  LinearProgram lp = build_disagreement_lp(graph, objective, pins, measured);
  LpSolution solution = solve_lp(lp);
  if (solution.status == SolveStatus::infeasible) return std::nullopt;
  if (solution.status == SolveStatus::unbounded)
    throw internal_error("disagreement relaxation cannot be unbounded");
  return extract_metric(graph, lp, solution);
}

AgreementsSolution solve_agreements_metric(const SignedGraph& graph) {
  LinearProgram lp = build_agreements_lp(graph);
  LpSolution solution = solve_lp(lp);
  if (solution.status != SolveStatus::optimal)
    throw internal_error("agreements relaxation must be solvable");
  return extract_agreements(graph, lp, solution);
}

std::vector<EdgePin> heavy_edge_pins(const SignedGraph& graph, double c_max) {
  if (!(c_max >= 0.0)) throw contract_error("c_max must be nonnegative");
  std::vector<EdgePin> pins;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const SignedEdge& edge = graph.edge(e);
    if (edge.weight > c_max)
      pins.push_back({e, edge.sign == Sign::plus ? 0.0 : 1.0});
  }
  return pins;
}

}  // namespace lgc
