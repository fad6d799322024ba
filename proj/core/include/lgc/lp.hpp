#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace lgc {

enum class Relation : std::uint8_t { le, eq, ge };
enum class Sense : std::uint8_t { minimize, maximize };

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LinearTerm {
  int var = 0;
  double coeff = 0.0;
};

struct LpVariable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
};

struct LpConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation rel = Relation::le;
  double rhs = 0.0;
};

/// Plain LP carrier: named variables with bounds, a linear objective and a
/// list of linear constraints. Coefficients must be finite and every term
/// must reference a declared variable.
class LinearProgram {
 public:
  int add_variable(std::string name, double lower = 0.0,
                   double upper = kInfinity);
  void add_constraint(std::string name, std::vector<LinearTerm> terms,
                      Relation rel, double rhs);
  void set_objective(Sense sense, std::vector<double> coefficients);
  void set_objective_coefficient(int var, double coeff);
  void set_sense(Sense sense) { sense_ = sense; }

  /// Intersects the variable's bound box with [lower, upper]. An empty box
  /// makes the program infeasible rather than being rejected here.
  void restrict_bounds(int var, double lower, double upper);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<double>& objective() const { return objective_; }
  Sense sense() const { return sense_; }

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::vector<double> objective_;
  Sense sense_ = Sense::minimize;
};

enum class SolveStatus : std::uint8_t { optimal, infeasible, unbounded };

struct LpSolution {
  SolveStatus status = SolveStatus::optimal;
  double objective = 0.0;
  std::vector<double> values;
  /// Largest scaled constraint violation of the returned point.
  double max_violation = 0.0;
  int iterations = 0;
};

/// Solves the program with a bounded-variable two-phase revised simplex.
/// Optimal points satisfy every constraint within 1e-7 (relative on rows
/// with large activity) and the objective is exact up to factorization
/// round-off.
LpSolution solve_lp(const LinearProgram& lp);

/// Text interchange format (CPLEX LP style subset). Round-trips exactly:
/// numbers are printed with enough digits to recover the double.
void write_lp(const LinearProgram& lp, std::ostream& out);
LinearProgram read_lp(std::istream& in);

}  // namespace lgc
