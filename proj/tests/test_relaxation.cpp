#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lgc/errors.hpp"
#include "lgc/instances.hpp"
#include "lgc/oracle.hpp"
#include "lgc/relaxation.hpp"

using namespace lgc;

TEST_CASE("pair index layout") {
  CHECK(metric_pair_index(4, 0, 1) == 0);
  CHECK(metric_pair_index(4, 0, 3) == 2);
  CHECK(metric_pair_index(4, 1, 2) == 3);
  CHECK(metric_pair_index(4, 3, 2) == 5);  // order-insensitive
  CHECK_THROWS_AS(metric_pair_index(4, 2, 2), contract_error);
}

TEST_CASE("gap cycle disagreement relaxation optimum is 2/n") {
  SignedGraph g = gap_cycle(10);
  LinearProgram lp = build_disagreement_lp(g, Aggregate::max);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(std::fabs(s.objective - 0.2) <= 1e-6);

  MetricSolution metric = extract_metric(g, lp, s);
  CHECK(metric.objective_value == s.objective);
  for (double value : metric.fractional_disagreement) CHECK(value <= 0.2 + 1e-6);
}

TEST_CASE("all-plus graphs have optimum zero and D == 0") {
  SignedGraph g = random_signed(6, 1.0, 3, 4);
  auto metric = solve_disagreement_metric(g, Aggregate::max);
  REQUIRE(metric.has_value());
  CHECK(metric->objective_value == doctest::Approx(0.0));
  for (double value : metric->fractional_disagreement)
    CHECK(std::fabs(value) <= 1e-7);
}

namespace {

// Second, independent emission of the same relaxation: D is substituted
// away, triangle rows are written in <= form, and the per-vertex cap rows
// carry the edge terms directly. Shares only the solver with the library
// path.
double alt_minmax_lp_value(const SignedGraph& g) {
  const int n = g.vertex_count();
  LinearProgram lp;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      lp.add_variable("p" + std::to_string(u) + "_" + std::to_string(v), 0, 1);
  int t = lp.add_variable("t");
  for (int u = 0; u < n; ++u) {
    std::vector<LinearTerm> terms;
    double rhs = 0.0;
    for (int e : g.incident(u)) {
      const SignedEdge& edge = g.edge(e);
      int idx = metric_pair_index(n, edge.u, edge.v);
      if (edge.sign == Sign::plus) {
        terms.push_back({idx, edge.weight});
      } else {
        terms.push_back({idx, -edge.weight});
        rhs -= edge.weight;
      }
    }
    terms.push_back({t, -1.0});
    lp.add_constraint("vertex" + std::to_string(u), std::move(terms),
                      Relation::le, rhs);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        int uv = metric_pair_index(n, u, v);
        int uw = metric_pair_index(n, u, w);
        int vw = metric_pair_index(n, v, w);
        std::string base = "t" + std::to_string(u) + "_" + std::to_string(v) +
                           "_" + std::to_string(w);
        lp.add_constraint(base + "x", {{uw, 1.0}, {uv, -1.0}, {vw, -1.0}},
                          Relation::le, 0.0);
        lp.add_constraint(base + "y", {{vw, 1.0}, {uv, -1.0}, {uw, -1.0}},
                          Relation::le, 0.0);
        lp.add_constraint(base + "z", {{uv, 1.0}, {uw, -1.0}, {vw, -1.0}},
                          Relation::le, 0.0);
      }
  lp.set_objective_coefficient(t, 1.0);
  lp.set_sense(Sense::minimize);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  return s.objective;
}

}  // namespace

TEST_CASE("two emissions of the relaxation agree") {
  SignedGraph k4(4, {{0, 1, 1, Sign::plus}, {0, 2, 1, Sign::plus},
                     {0, 3, 1, Sign::plus}, {1, 2, 1, Sign::plus},
                     {1, 3, 1, Sign::plus}, {2, 3, 1, Sign::minus}});
  LpSolution s = solve_lp(build_disagreement_lp(k4, Aggregate::max));
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(std::fabs(s.objective - alt_minmax_lp_value(k4)) <= 2e-6);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SignedGraph g = random_signed(6, 0.5, 3, seed);
    LpSolution a = solve_lp(build_disagreement_lp(g, Aggregate::max));
    REQUIRE(a.status == SolveStatus::optimal);
    CHECK(std::fabs(a.objective - alt_minmax_lp_value(g)) <= 2e-6);
  }
}

TEST_CASE("gap cycle agreements relaxation optimum is 2 - 2/n") {
  LpSolution s = solve_lp(build_agreements_lp(gap_cycle(10)));
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(std::fabs(s.objective - 1.8) <= 1e-6);
}

TEST_CASE("agreements relaxation on a single edge") {
  SignedGraph plus(2, {{0, 1, 1, Sign::plus}});
  LpSolution s1 = solve_lp(build_agreements_lp(plus));
  REQUIRE(s1.status == SolveStatus::optimal);
  CHECK(s1.objective == doctest::Approx(1.0));

  SignedGraph minus(2, {{0, 1, 1, Sign::minus}});
  LpSolution s2 = solve_lp(build_agreements_lp(minus));
  REQUIRE(s2.status == SolveStatus::optimal);
  CHECK(s2.objective == doctest::Approx(1.0));
}

TEST_CASE("triangle row count is 3 C(n,3)") {
  for (int n : {3, 4, 6, 8}) {
    LinearProgram lp = build_disagreement_lp(gap_cycle(std::max(n, 3)),
                                             Aggregate::max);
    int triangles = 0;
    for (const LpConstraint& row : lp.constraints())
      if (row.name.rfind("tri_", 0) == 0) ++triangles;
    int expect = 3 * n * (n - 1) * (n - 2) / 6;
    CHECK(triangles == expect);
  }
}

TEST_CASE("relaxation lower-bounds the integral optimum") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    SignedGraph g = random_signed(6, 0.5, 4, seed);
    for (Aggregate objective : {Aggregate::max, Aggregate::sum}) {
      LpSolution s = solve_lp(build_disagreement_lp(g, objective));
      REQUIRE(s.status == SolveStatus::optimal);
      OracleResult exact = exact_min_local_disagreements(g, objective);
      CHECK(s.objective <= exact.value + 1e-6);
    }
  }
}

TEST_CASE("pins hold exactly and can be infeasible") {
  SignedGraph g = gap_cycle(6);
  // every edge is heavy for c_max = 0.5: + edges collapse the cycle to one
  // point while the - edge insists on distance 1
  auto pins = heavy_edge_pins(g, 0.5);
  CHECK(pins.size() == 6);
  CHECK(!solve_disagreement_metric(g, Aggregate::max, pins).has_value());

  // pin only the - edge; the rest of the cycle can stretch
  std::vector<EdgePin> one_pin{{5, 1.0}};
  auto metric = solve_disagreement_metric(g, Aggregate::max, one_pin);
  REQUIRE(metric.has_value());
  CHECK(metric->distance(5, 0) == 1.0);  // exact, pins are variable fixings

  // a pin with the wrong sign is a usage error
  CHECK_THROWS_AS(build_disagreement_lp(g, Aggregate::max,
                                        std::vector<EdgePin>{{0, 1.0}}),
                  contract_error);
  CHECK_THROWS_AS(build_disagreement_lp(g, Aggregate::max,
                                        std::vector<EdgePin>{{5, 0.0}}),
                  contract_error);
}

TEST_CASE("unpinned relaxation is always feasible") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    SignedGraph g = random_signed(7, 0.3, 4, seed);
    CHECK(solve_disagreement_metric(g, Aggregate::max).has_value());
  }
}

TEST_CASE("fractional disagreement matches its recomputation") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SignedGraph g = random_signed(6, 0.5, 4, seed + 40);
    auto metric = solve_disagreement_metric(g, Aggregate::max);
    REQUIRE(metric.has_value());  // extract_metric already asserts the bound
    auto c = total_incident_weight(g);
    for (int u = 0; u < 6; ++u) {
      double expect = 0.0;
      for (int e : g.incident(u)) {
        const SignedEdge& edge = g.edge(e);
        double d = metric->distance(edge.u, edge.v);
        expect += edge.weight * (edge.sign == Sign::plus ? d : 1.0 - d);
      }
      CHECK(std::fabs(expect - metric->fractional_disagreement[u]) <=
            1e-7 * (1.0 + c[u]));
    }
  }
}

TEST_CASE("one-sided measurement restricts the objective") {
  auto inst = complete_bipartite_random(3, 3, 9);
  std::vector<int> left;
  for (int u = 0; u < 6; ++u)
    if (inst.sides.is_left(u)) left.push_back(u);
  LpSolution one_sided = solve_lp(
      build_disagreement_lp(inst.graph, Aggregate::max, {}, left));
  LpSolution full = solve_lp(build_disagreement_lp(inst.graph, Aggregate::max));
  REQUIRE(one_sided.status == SolveStatus::optimal);
  REQUIRE(full.status == SolveStatus::optimal);
  CHECK(one_sided.objective <= full.objective + 1e-9);
}

TEST_CASE("tiny vertex counts") {
  // n = 2: one pair variable and no triangle rows
  SignedGraph pair(2, {{0, 1, 2.0, Sign::minus}});
  auto metric = solve_disagreement_metric(pair, Aggregate::max);
  REQUIRE(metric.has_value());
  CHECK(metric->objective_value == doctest::Approx(0.0));
  CHECK(metric->distance(0, 1) == doctest::Approx(1.0));

  // n = 1: no pairs at all, the optimum is an empty metric
  SignedGraph lonely(1, {});
  auto single = solve_disagreement_metric(lonely, Aggregate::max);
  REQUIRE(single.has_value());
  CHECK(single->objective_value == doctest::Approx(0.0));

  LpSolution agree = solve_lp(build_agreements_lp(pair));
  REQUIRE(agree.status == SolveStatus::optimal);
  CHECK(agree.objective == doctest::Approx(2.0));
}

TEST_CASE("relaxation survives the text interchange format") {
  SignedGraph g = gap_cycle(6);
  LinearProgram lp = build_disagreement_lp(g, Aggregate::max);
  std::ostringstream out;
  write_lp(lp, out);
  std::istringstream in(out.str());
  LinearProgram back = read_lp(in);
  LpSolution s1 = solve_lp(lp);
  LpSolution s2 = solve_lp(back);
  REQUIRE(s1.status == SolveStatus::optimal);
  REQUIRE(s2.status == SolveStatus::optimal);
  CHECK(s1.objective == doctest::Approx(s2.objective));
  CHECK(back.constraint_count() == lp.constraint_count());
}
