#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "lgc/errors.hpp"
#include "lgc/instances.hpp"
#include "lgc/lp.hpp"

using namespace lgc;

TEST_CASE("small known optima") {
  {
    LinearProgram lp;
    int x = lp.add_variable("x", 0, 1);
    int y = lp.add_variable("y", 0, 1);
    lp.add_constraint("cover", {{x, 1}, {y, 1}}, Relation::ge, 1.0);
    lp.set_objective(Sense::minimize, {1.0, 1.0});
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == SolveStatus::optimal);
    CHECK(s.objective == doctest::Approx(1.0));
    CHECK(s.max_violation <= 1e-9);
  }
  {
    LinearProgram lp;
    int x = lp.add_variable("x");
    int y = lp.add_variable("y");
    lp.add_constraint("r1", {{x, 1}, {y, 1}}, Relation::le, 4.0);
    lp.add_constraint("r2", {{x, 1}, {y, 3}}, Relation::le, 6.0);
    lp.set_objective(Sense::maximize, {3.0, 2.0});
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == SolveStatus::optimal);
    CHECK(s.objective == doctest::Approx(12.0));
    CHECK(s.values[x] == doctest::Approx(4.0));
  }
  {
    LinearProgram lp;
    int x = lp.add_variable("x", 0, 10);
    lp.add_constraint("fix", {{x, 1}}, Relation::eq, 5.0);
    lp.set_objective(Sense::minimize, {1.0});
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == SolveStatus::optimal);
    CHECK(s.objective == doctest::Approx(5.0));
  }
  {
    // only upper-bounded box, optimum at nonbasic upper bounds
    LinearProgram lp;
    int x = lp.add_variable("x", 0, 2);
    int y = lp.add_variable("y", 0, 3);
    lp.add_constraint("cap", {{x, 1}, {y, 1}}, Relation::le, 10.0);
    lp.set_objective(Sense::maximize, {1.0, 1.0});
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == SolveStatus::optimal);
    CHECK(s.objective == doctest::Approx(5.0));
  }
}

TEST_CASE("free variables are handled") {
  LinearProgram lp;
  int x = lp.add_variable("x", -kInfinity, kInfinity);
  int y = lp.add_variable("y", -kInfinity, kInfinity);
  lp.add_constraint("a", {{y, 1}, {x, -1}}, Relation::ge, -3.0);  // y >= x - 3
  lp.add_constraint("b", {{y, 1}, {x, 1}}, Relation::ge, 3.0);    // y >= 3 - x
  lp.set_objective(Sense::minimize, {0.0, 1.0});
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.objective == doctest::Approx(0.0));
  CHECK(s.values[x] == doctest::Approx(3.0));
}

TEST_CASE("infeasible and unbounded detection") {
  {
    // two equality rows pinning one variable to different values
    LinearProgram lp;
    int d = lp.add_variable("d", 0, 1);
    lp.add_constraint("pin0", {{d, 1}}, Relation::eq, 0.0);
    lp.add_constraint("pin1", {{d, 1}}, Relation::eq, 1.0);
    lp.set_objective(Sense::minimize, {1.0});
    CHECK(solve_lp(lp).status == SolveStatus::infeasible);
  }
  {
    LinearProgram lp;
    int x = lp.add_variable("x", 0, 10);
    lp.add_constraint("lo", {{x, 1}}, Relation::ge, 2.0);
    lp.add_constraint("hi", {{x, 1}}, Relation::le, 1.0);
    CHECK(solve_lp(lp).status == SolveStatus::infeasible);
  }
  {
    // crossed bounds are an empty feasible region, not a usage error
    LinearProgram lp;
    lp.add_variable("x", 2.0, 1.0);
    CHECK(solve_lp(lp).status == SolveStatus::infeasible);
  }
  {
    LinearProgram lp;
    int x = lp.add_variable("x");
    lp.add_constraint("lo", {{x, 1}}, Relation::ge, 1.0);
    lp.set_objective(Sense::maximize, {1.0});
    CHECK(solve_lp(lp).status == SolveStatus::unbounded);
  }
}

namespace {

// Geometric oracle for 2-variable programs: the optimum of a feasible
// bounded LP sits on an intersection of two tight constraints (rows or
// bounds). Enumerate all candidate points, keep the feasible ones.
struct Row2 {
  double a, b, rhs;
  Relation rel;
};

bool feasible2(double x, double y, const std::vector<Row2>& rows, double lo,
               double hi) {
  if (x < lo - 1e-7 || x > hi + 1e-7 || y < lo - 1e-7 || y > hi + 1e-7)
    return false;
  for (const Row2& r : rows) {
    double v = r.a * x + r.b * y;
    if (r.rel == Relation::le && v > r.rhs + 1e-7) return false;
    if (r.rel == Relation::ge && v < r.rhs - 1e-7) return false;
  }
  return true;
}

double oracle2(const std::vector<Row2>& rows, double cx, double cy, double lo,
               double hi, bool* feasible_out) {
  // collect all lines: rows plus the four box sides
  std::vector<Row2> lines = rows;
  lines.push_back({1, 0, lo, Relation::ge});
  lines.push_back({1, 0, hi, Relation::le});
  lines.push_back({0, 1, lo, Relation::ge});
  lines.push_back({0, 1, hi, Relation::le});
  double best = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (std::fabs(det) < 1e-12) continue;
      double x = (lines[i].rhs * lines[j].b - lines[j].rhs * lines[i].b) / det;
      double y = (lines[i].a * lines[j].rhs - lines[j].a * lines[i].rhs) / det;
      if (!feasible2(x, y, rows, lo, hi)) continue;
      double value = cx * x + cy * y;
      if (!found || value < best) best = value;
      found = true;
    }
  }
  *feasible_out = found;
  return best;
}

}  // namespace

TEST_CASE("random 2-variable programs match the geometric oracle") {
  SplitMix64 rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double lo = 0.0, hi = 4.0;
    std::vector<Row2> rows;
    int m = 1 + static_cast<int>(rng.next_below(4));
    for (int i = 0; i < m; ++i) {
      double a = static_cast<double>(rng.next_below(9)) - 4.0;
      double b = static_cast<double>(rng.next_below(9)) - 4.0;
      double rhs = static_cast<double>(rng.next_below(13)) - 4.0;
      Relation rel = rng.next_unit() < 0.5 ? Relation::le : Relation::ge;
      rows.push_back({a, b, rhs, rel});
    }
    double cx = static_cast<double>(rng.next_below(9)) - 4.0;
    double cy = static_cast<double>(rng.next_below(9)) - 4.0;

    LinearProgram lp;
    int x = lp.add_variable("x", lo, hi);
    int y = lp.add_variable("y", lo, hi);
    for (std::size_t i = 0; i < rows.size(); ++i)
      lp.add_constraint("r" + std::to_string(i),
                        {{x, rows[i].a}, {y, rows[i].b}}, rows[i].rel,
                        rows[i].rhs);
    lp.set_objective(Sense::minimize, {cx, cy});

    bool oracle_feasible = false;
    double expect = oracle2(rows, cx, cy, lo, hi, &oracle_feasible);
    LpSolution s = solve_lp(lp);
    if (!oracle_feasible) {
      CHECK(s.status == SolveStatus::infeasible);
      continue;
    }
    REQUIRE(s.status == SolveStatus::optimal);
    CHECK(s.objective == doctest::Approx(expect).epsilon(1e-6));
    CHECK(s.max_violation <= 1e-7);
    ++solved;
  }
  CHECK(solved > 50);  // the generator must produce plenty of feasible LPs
}

TEST_CASE("strong duality on random feasible programs") {
  // Generator: min c'x over x >= 0 with mixed-relation rows chosen so that
  // a random box point stays feasible, plus explicit upper-bound rows.
  // The dual (max b'y, A'y <= c, y signed by row relation) must match.
  SplitMix64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    const int m = 2 + static_cast<int>(rng.next_below(8));

    std::vector<double> x0(n);
    for (double& v : x0) v = rng.next_unit() * 3.0;

    struct Row {
      std::vector<double> coeffs;
      Relation rel;
      double rhs;
    };
    std::vector<Row> rows;
    for (int i = 0; i < m; ++i) {
      Row row;
      row.coeffs.resize(n);
      double activity = 0.0;
      for (int j = 0; j < n; ++j) {
        row.coeffs[j] = static_cast<double>(rng.next_below(7)) - 3.0;
        activity += row.coeffs[j] * x0[j];
      }
      double r = rng.next_unit();
      if (r < 0.4) {
        row.rel = Relation::le;
        row.rhs = activity + rng.next_unit() * 2.0;
      } else if (r < 0.8) {
        row.rel = Relation::ge;
        row.rhs = activity - rng.next_unit() * 2.0;
      } else {
        row.rel = Relation::eq;
        row.rhs = activity;
      }
      rows.push_back(std::move(row));
    }
    // box rows keep the primal bounded
    for (int j = 0; j < n; ++j) {
      Row cap;
      cap.coeffs.assign(n, 0.0);
      cap.coeffs[j] = 1.0;
      cap.rel = Relation::le;
      cap.rhs = x0[j] + 1.0 + rng.next_unit() * 3.0;
      rows.push_back(std::move(cap));
    }
    std::vector<double> cost(n);
    for (double& v : cost) v = static_cast<double>(rng.next_below(9)) - 4.0;

    LinearProgram primal;
    for (int j = 0; j < n; ++j) primal.add_variable("x" + std::to_string(j));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<LinearTerm> terms;
      for (int j = 0; j < n; ++j)
        if (rows[i].coeffs[j] != 0.0) terms.push_back({j, rows[i].coeffs[j]});
      primal.add_constraint("r" + std::to_string(i), std::move(terms),
                            rows[i].rel, rows[i].rhs);
    }
    primal.set_objective(Sense::minimize, cost);

    LinearProgram dual;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      switch (rows[i].rel) {
        case Relation::ge:
          dual.add_variable("y" + std::to_string(i), 0.0, kInfinity);
          break;
        case Relation::le:
          dual.add_variable("y" + std::to_string(i), -kInfinity, 0.0);
          break;
        case Relation::eq:
          dual.add_variable("y" + std::to_string(i), -kInfinity, kInfinity);
          break;
      }
    }
    for (int j = 0; j < n; ++j) {
      std::vector<LinearTerm> terms;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].coeffs[j] != 0.0)
          terms.push_back({static_cast<int>(i), rows[i].coeffs[j]});
      dual.add_constraint("d" + std::to_string(j), std::move(terms),
                          Relation::le, cost[j]);
    }
    std::vector<double> dual_cost(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) dual_cost[i] = rows[i].rhs;
    dual.set_objective(Sense::maximize, dual_cost);

    LpSolution p = solve_lp(primal);
    REQUIRE(p.status == SolveStatus::optimal);  // feasible and box-bounded
    LpSolution d = solve_lp(dual);
    REQUIRE(d.status == SolveStatus::optimal);
    CHECK(p.objective ==
          doctest::Approx(d.objective).epsilon(1e-6).scale(1.0));
    CHECK(p.max_violation <= 1e-7);
    CHECK(d.max_violation <= 1e-7);

    // determinism: resolving bit-identically
    LpSolution p2 = solve_lp(primal);
    CHECK(p2.objective == p.objective);
    CHECK(p2.values == p.values);
  }
}

TEST_CASE("lp text format round trips") {
  LinearProgram lp;
  int x = lp.add_variable("x", 0, 1.5);
  int y = lp.add_variable("y", -kInfinity, kInfinity);
  int z = lp.add_variable("z", 0.25, 0.25);
  lp.add_constraint("r1", {{x, 1.0}, {y, -2.5}}, Relation::le, 3.0);
  lp.add_constraint("r2", {{y, 1.0}, {z, 4.0}}, Relation::ge, -1.0);
  lp.add_constraint("r3", {{x, 1.0}, {y, 1.0}, {z, 1.0}}, Relation::eq, 1.0);
  lp.set_objective(Sense::maximize, {1.0, -0.125, 0.0});

  std::ostringstream out;
  write_lp(lp, out);
  std::istringstream in(out.str());
  LinearProgram back = read_lp(in);

  REQUIRE(back.variable_count() == lp.variable_count());
  REQUIRE(back.constraint_count() == lp.constraint_count());
  CHECK(back.sense() == lp.sense());
  for (int j = 0; j < lp.variable_count(); ++j) {
    CHECK(back.variables()[j].name == lp.variables()[j].name);
    CHECK(back.variables()[j].lower == lp.variables()[j].lower);
    CHECK(back.variables()[j].upper == lp.variables()[j].upper);
    CHECK(back.objective()[j] == lp.objective()[j]);
  }
  for (int i = 0; i < lp.constraint_count(); ++i) {
    const LpConstraint& a = lp.constraints()[i];
    const LpConstraint& b = back.constraints()[i];
    CHECK(a.name == b.name);
    CHECK(a.rel == b.rel);
    CHECK(a.rhs == b.rhs);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      CHECK(a.terms[k].var == b.terms[k].var);
      CHECK(a.terms[k].coeff == b.terms[k].coeff);
    }
  }

  LpSolution s1 = solve_lp(lp);
  LpSolution s2 = solve_lp(back);
  REQUIRE(s1.status == SolveStatus::optimal);
  REQUIRE(s2.status == SolveStatus::optimal);
  CHECK(s1.objective == doctest::Approx(s2.objective));
}

TEST_CASE("carrier validation") {
  LinearProgram lp;
  int x = lp.add_variable("x");
  CHECK_THROWS_AS(lp.add_constraint("bad", {{x + 1, 1.0}}, Relation::le, 0.0),
                  contract_error);
  CHECK_THROWS_AS(lp.add_constraint("nan", {{x, 1.0}}, Relation::le,
                                    std::nan("")),
                  contract_error);
  CHECK_THROWS_AS(lp.set_objective(Sense::minimize, {1.0, 2.0}),
                  contract_error);
}
