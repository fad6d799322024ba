#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "lgc/errors.hpp"
#include "lgc/lp.hpp"

// Bounded-variable two-phase revised simplex.
//
// Every row gets a logical column (slack with bounds chosen by the row
// relation); rows whose logical cannot host the initial point get an
// artificial driven out by phase 1. The basis therefore always consists of
// unit columns plus a small set of structural columns, and B factors as a
// block triangular system whose only dense part is the structural core
// A_xx (core rows x structural basics). The core inverse is kept
// explicitly and maintained across pivots with rank-1 (Sherman-Morrison)
// and bordered updates in O(core^2); a full refactorization runs
// periodically and whenever an update pivot is too small.

namespace lgc {
namespace {

constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr double kUpdateTol = 1e-6;  // below this, rebuild instead of update
constexpr int kRefactorInterval = 100;
constexpr int kMaxIterations = 2000000;
constexpr int kDegenerateLimit = 300;

enum class ColState : unsigned char { basic, at_lower, at_upper };

struct Column {
  double lower = 0.0;
  double upper = kInfinity;
  double cost = 0.0;  // phase-2 cost
  std::vector<std::pair<int, double>> entries;  // sorted by row, unique
  bool artificial = false;
  bool unit = false;  // single +-1 entry (logical or artificial)
  int unit_row = -1;
  double unit_coeff = 1.0;
};

class Simplex {
 public:
  Simplex(const LinearProgram& lp) : lp_(lp) {}

  LpSolution run();

 private:
  void build_columns();
  void initial_basis();
  void refactor();
  void apply_basis_change(int entering, int leave_row);
  bool inverse_is_fresh() const;
  bool update_replace_column(int entering, int leave_row);
  bool update_grow(int entering, int leave_row);
  bool update_shrink(int entering, int leave_row);
  bool update_swap_units(int entering, int leave_row);
  // z = B^-1 a for a dense rhs (overwritten in place).
  void ftran(std::vector<double>& a) const;
  // y solves B' y = cb where cb is indexed by row (cost of that row's basic).
  void btran(const std::vector<double>& cb, std::vector<double>& y) const;
  double reduced_cost(int c, const std::vector<double>& y, bool phase1) const;
  int price(const std::vector<double>& y, bool phase1, bool bland) const;
  void column_dense(int c, std::vector<double>& out) const;
  double coeff(int row, int col) const;
  int core_position_of_column(int col) const;
  void recompute_basics();
  bool iterate(bool phase1, bool bland, bool& unbounded, bool& progressed);
  void drive_out_artificials();
  double phase_objective(bool phase1) const;

  const LinearProgram& lp_;
  int rows_ = 0;
  std::vector<double> rhs_;
  std::vector<Column> cols_;
  std::vector<ColState> state_;
  std::vector<double> value_;
  std::vector<int> basis_col_;    // per row: the basic hosted by that row
  std::vector<int> core_rows_;    // rows whose basic column is structural
  std::vector<int> core_cols_;    // structural basic columns, core order
  std::vector<int> host_row_;     // host_row_[q]: row hosting core_cols_[q]
  std::vector<int> pos_in_core_;  // row -> core row position or -1
  Eigen::MatrixXd inv_;           // inverse of A_xx
  int updates_since_refactor_ = 0;
  // original variable -> (column, optional negated column for free split)
  std::vector<std::pair<int, int>> var_cols_;
  int iterations_ = 0;
};

void Simplex::build_columns() {
  rows_ = lp_.constraint_count();
  rhs_.resize(rows_);
  for (int r = 0; r < rows_; ++r) rhs_[r] = lp_.constraints()[r].rhs;

  var_cols_.reserve(lp_.variable_count());
  for (int j = 0; j < lp_.variable_count(); ++j) {
    const LpVariable& v = lp_.variables()[j];
    double cost = lp_.objective()[j];
    if (lp_.sense() == Sense::maximize) cost = -cost;
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      Column pos, neg;
      pos.lower = neg.lower = 0.0;
      pos.cost = cost;
      neg.cost = -cost;
      cols_.push_back(pos);
      cols_.push_back(neg);
      var_cols_.push_back({static_cast<int>(cols_.size()) - 2,
                           static_cast<int>(cols_.size()) - 1});
    } else {
      Column col;
      col.lower = v.lower;
      col.upper = v.upper;
      col.cost = cost;
      cols_.push_back(col);
      var_cols_.push_back({static_cast<int>(cols_.size()) - 1, -1});
    }
  }
  for (int r = 0; r < rows_; ++r) {
    for (const LinearTerm& t : lp_.constraints()[r].terms) {
      auto [c_pos, c_neg] = var_cols_[t.var];
      cols_[c_pos].entries.push_back({r, t.coeff});
      if (c_neg >= 0) cols_[c_neg].entries.push_back({r, -t.coeff});
    }
  }
  // rows were scanned in order, so entries are sorted; merge duplicate
  // terms a row may carry so that coefficient lookups stay unambiguous
  for (Column& col : cols_) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.entries.size(); ++i) {
      if (out > 0 && col.entries[out - 1].first == col.entries[i].first)
        col.entries[out - 1].second += col.entries[i].second;
      else
        col.entries[out++] = col.entries[i];
    }
    col.entries.resize(out);
  }
  // logical column per row
  for (int r = 0; r < rows_; ++r) {
    Column col;
    col.unit = true;
    col.unit_row = r;
    col.unit_coeff = 1.0;
    col.entries.push_back({r, 1.0});
    switch (lp_.constraints()[r].rel) {
      case Relation::le:
        col.lower = 0.0;
        col.upper = kInfinity;
        break;
      case Relation::ge:
        col.lower = -kInfinity;
        col.upper = 0.0;
        break;
      case Relation::eq:
        col.lower = col.upper = 0.0;
        break;
    }
    cols_.push_back(col);
  }
}

void Simplex::initial_basis() {
  state_.assign(cols_.size(), ColState::at_lower);
  value_.assign(cols_.size(), 0.0);
  basis_col_.assign(rows_, -1);

  const int structural_end =
      static_cast<int>(cols_.size()) - rows_;  // before logicals
  for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
    if (cols_[c].lower != -kInfinity) {
      state_[c] = ColState::at_lower;
      value_[c] = cols_[c].lower;
    } else if (cols_[c].upper != kInfinity) {
      state_[c] = ColState::at_upper;
      value_[c] = cols_[c].upper;
    } else {
      throw internal_error("column with no finite bound after split");
    }
  }

  std::vector<double> activity(rows_, 0.0);
  for (int c = 0; c < structural_end; ++c)
    if (value_[c] != 0.0)
      for (auto [r, a] : cols_[c].entries) activity[r] += a * value_[c];

  for (int r = 0; r < rows_; ++r) {
    int logical = structural_end + r;
    double target = rhs_[r] - activity[r];
    const Column& col = cols_[logical];
    if (lp_.constraints()[r].rel != Relation::eq && target >= col.lower &&
        target <= col.upper) {
      basis_col_[r] = logical;
      state_[logical] = ColState::basic;
      value_[logical] = target;
    } else {
      Column art;
      art.artificial = true;
      art.unit = true;
      art.unit_row = r;
      art.unit_coeff = target < 0.0 ? -1.0 : 1.0;
      art.entries.push_back({r, art.unit_coeff});
      art.lower = 0.0;
      art.upper = kInfinity;
      cols_.push_back(art);
      int c = static_cast<int>(cols_.size()) - 1;
      basis_col_[r] = c;
      state_.push_back(ColState::basic);
      value_.push_back(std::fabs(target));
    }
  }
}

double Simplex::coeff(int row, int col) const {
  const auto& entries = cols_[col].entries;
  auto it = std::lower_bound(
      entries.begin(), entries.end(), row,
      [](const std::pair<int, double>& e, int r) { return e.first < r; });
  return (it != entries.end() && it->first == row) ? it->second : 0.0;
}

int Simplex::core_position_of_column(int col) const {
  for (std::size_t q = 0; q < core_cols_.size(); ++q)
    if (core_cols_[q] == col) return static_cast<int>(q);
  throw internal_error("column not in the basis core");
}

void Simplex::refactor() {
  // Re-pair basic columns with rows: a unit column must own its row or the
  // block solves below fall apart. Structural basics take the leftovers.
  std::vector<int> basics(basis_col_.begin(), basis_col_.end());
  std::vector<int> structural;
  std::fill(basis_col_.begin(), basis_col_.end(), -1);
  for (int c : basics) {
    if (cols_[c].unit) {
      if (basis_col_[cols_[c].unit_row] >= 0)
        throw internal_error("two unit basics on one row");
      basis_col_[cols_[c].unit_row] = c;
    } else {
      structural.push_back(c);
    }
  }
  std::size_t next = 0;
  for (int r = 0; r < rows_; ++r)
    if (basis_col_[r] < 0) basis_col_[r] = structural[next++];
  if (next != structural.size())
    throw internal_error("basis does not cover all rows");

  core_rows_.clear();
  core_cols_.clear();
  pos_in_core_.assign(rows_, -1);
  for (int r = 0; r < rows_; ++r) {
    if (!cols_[basis_col_[r]].unit) {
      pos_in_core_[r] = static_cast<int>(core_rows_.size());
      core_rows_.push_back(r);
      core_cols_.push_back(basis_col_[r]);
    }
  }
  host_row_ = core_rows_;  // aligned by construction

  const int k = static_cast<int>(core_rows_.size());
  Eigen::MatrixXd core = Eigen::MatrixXd::Zero(k, k);
  for (int q = 0; q < k; ++q)
    for (auto [r, a] : cols_[core_cols_[q]].entries)
      if (pos_in_core_[r] >= 0) core(pos_in_core_[r], q) += a;
  if (k > 0) inv_ = core.partialPivLu().inverse();
  updates_since_refactor_ = 0;
}

void Simplex::ftran(std::vector<double>& a) const {
  const int k = static_cast<int>(core_rows_.size());
  if (k > 0) {
    Eigen::VectorXd rhs(k);
    for (int p = 0; p < k; ++p) rhs(p) = a[core_rows_[p]];
    Eigen::VectorXd zx = inv_ * rhs;
    for (int q = 0; q < k; ++q) {
      double z = zx(q);
      if (z == 0.0) continue;
      for (auto [r, aij] : cols_[core_cols_[q]].entries)
        if (pos_in_core_[r] < 0) a[r] -= aij * z;
    }
    // zx[q] is the multiplier of core column q, i.e. the value slot of the
    // row hosting that structural basic
    for (int q = 0; q < k; ++q) a[host_row_[q]] = zx(q);
  }
  for (int r = 0; r < rows_; ++r) {
    if (pos_in_core_[r] >= 0) continue;
    a[r] *= cols_[basis_col_[r]].unit_coeff;  // coeff is +-1
  }
}

void Simplex::btran(const std::vector<double>& cb,
                    std::vector<double>& y) const {
  y.assign(rows_, 0.0);
  for (int r = 0; r < rows_; ++r)
    if (pos_in_core_[r] < 0) y[r] = cb[r] * cols_[basis_col_[r]].unit_coeff;
  const int k = static_cast<int>(core_rows_.size());
  if (k == 0) return;
  Eigen::VectorXd rhs(k);
  for (int q = 0; q < k; ++q) {
    double v = cb[host_row_[q]];
    for (auto [r, aij] : cols_[core_cols_[q]].entries)
      if (pos_in_core_[r] < 0) v -= aij * y[r];
    rhs(q) = v;
  }
  Eigen::VectorXd yx = inv_.transpose() * rhs;
  for (int p = 0; p < k; ++p) y[core_rows_[p]] = yx(p);
}

double Simplex::reduced_cost(int c, const std::vector<double>& y,
                             bool phase1) const {
  const Column& col = cols_[c];
  double cost = phase1 ? (col.artificial ? 1.0 : 0.0) : col.cost;
  double dot = 0.0;
  for (auto [r, a] : col.entries) dot += a * y[r];
  return cost - dot;
}

int Simplex::price(const std::vector<double>& y, bool phase1,
                   bool bland) const {
  int best = -1;
  double best_score = kDualTol;
  for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
    if (state_[c] == ColState::basic) continue;
    if (cols_[c].lower == cols_[c].upper) continue;  // fixed never enters
    if (!phase1 && cols_[c].artificial) continue;
    double d = reduced_cost(c, y, phase1);
    double score = 0.0;
    if (state_[c] == ColState::at_lower && d < -kDualTol)
      score = -d;
    else if (state_[c] == ColState::at_upper && d > kDualTol)
      score = d;
    else
      continue;
    if (bland) return c;  // first eligible index
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

void Simplex::column_dense(int c, std::vector<double>& out) const {
  out.assign(rows_, 0.0);
  for (auto [r, a] : cols_[c].entries) out[r] += a;
}

void Simplex::recompute_basics() {
  std::vector<double> resid = rhs_;
  for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
    if (state_[c] == ColState::basic || value_[c] == 0.0) continue;
    for (auto [r, a] : cols_[c].entries) resid[r] -= a * value_[c];
  }
  ftran(resid);
  for (int r = 0; r < rows_; ++r) value_[basis_col_[r]] = resid[r];
}

// Structural basic replaces a structural basic hosted at leave_row: rank-1
// column change of A_xx.
bool Simplex::update_replace_column(int entering, int leave_row) {
  const int k = static_cast<int>(core_rows_.size());
  int q = core_position_of_column(basis_col_[leave_row]);
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(k);
  for (auto [r, a] : cols_[entering].entries)
    if (pos_in_core_[r] >= 0) delta(pos_in_core_[r]) += a;
  for (auto [r, a] : cols_[core_cols_[q]].entries)
    if (pos_in_core_[r] >= 0) delta(pos_in_core_[r]) -= a;
  Eigen::VectorXd w = inv_ * delta;
  double denom = 1.0 + w(q);
  if (std::fabs(denom) < kUpdateTol) return false;
  inv_.noalias() -= (w / denom) * inv_.row(q);
  core_cols_[q] = entering;
  host_row_[q] = leave_row;
  basis_col_[leave_row] = entering;
  return true;
}

// Structural basic replaces a unit basic: the core gains leave_row as a row
// and the entering column; bordered inverse update.
bool Simplex::update_grow(int entering, int leave_row) {
  const int k = static_cast<int>(core_rows_.size());
  Eigen::VectorXd u = Eigen::VectorXd::Zero(k);
  for (auto [r, a] : cols_[entering].entries)
    if (pos_in_core_[r] >= 0) u(pos_in_core_[r]) += a;
  Eigen::VectorXd v(k);
  for (int q = 0; q < k; ++q) v(q) = coeff(leave_row, core_cols_[q]);
  double d = coeff(leave_row, entering);

  Eigen::VectorXd iu = inv_ * u;
  Eigen::VectorXd vi = inv_.transpose() * v;
  double schur = d - v.dot(iu);
  if (std::fabs(schur) < kUpdateTol) return false;

  Eigen::MatrixXd grown(k + 1, k + 1);
  grown.topLeftCorner(k, k) = inv_ + (iu * vi.transpose()) / schur;
  grown.topRightCorner(k, 1) = -iu / schur;
  grown.bottomLeftCorner(1, k) = -vi.transpose() / schur;
  grown(k, k) = 1.0 / schur;
  inv_ = std::move(grown);

  pos_in_core_[leave_row] = k;
  core_rows_.push_back(leave_row);
  core_cols_.push_back(entering);
  host_row_.push_back(leave_row);
  basis_col_[leave_row] = entering;
  return true;
}

// Unit basic replaces a structural basic: the entering unit's own row
// leaves the core together with the leaving column. The structural that was
// hosted on the vacated row moves to leave_row.
bool Simplex::update_shrink(int entering, int leave_row) {
  const int k = static_cast<int>(core_rows_.size());
  const int unit_row = cols_[entering].unit_row;
  // a legal pivot cannot put two unit basics on one row
  if (pos_in_core_[unit_row] < 0)
    throw internal_error("entering unit column on a non-core row");
  int pr = pos_in_core_[unit_row];                            // row to drop
  int pc = core_position_of_column(basis_col_[leave_row]);    // col to drop

  // move the dropped row/column to the last position; inv columns follow
  // A's rows and inv rows follow A's columns
  int last = k - 1;
  if (pr != last) {
    inv_.col(pr).swap(inv_.col(last));
    std::swap(core_rows_[pr], core_rows_[last]);
    pos_in_core_[core_rows_[pr]] = pr;
    pos_in_core_[core_rows_[last]] = last;
  }
  if (pc != last) {
    inv_.row(pc).swap(inv_.row(last));
    std::swap(core_cols_[pc], core_cols_[last]);
    std::swap(host_row_[pc], host_row_[last]);
  }
  double h = inv_(last, last);
  if (std::fabs(h) < kUpdateTol) {
    // roll the swaps back; the caller refactors from scratch
    if (pc != last) {
      inv_.row(pc).swap(inv_.row(last));
      std::swap(core_cols_[pc], core_cols_[last]);
      std::swap(host_row_[pc], host_row_[last]);
    }
    if (pr != last) {
      inv_.col(pr).swap(inv_.col(last));
      std::swap(core_rows_[pr], core_rows_[last]);
      pos_in_core_[core_rows_[pr]] = pr;
      pos_in_core_[core_rows_[last]] = last;
    }
    return false;
  }

  int displaced = basis_col_[unit_row];  // structural losing its host row
  int dropped_col = basis_col_[leave_row];
  Eigen::MatrixXd shrunk =
      inv_.topLeftCorner(last, last) -
      (inv_.topRightCorner(last, 1) * inv_.bottomLeftCorner(1, last)) / h;
  inv_ = std::move(shrunk);
  pos_in_core_[unit_row] = -1;
  core_rows_.pop_back();
  core_cols_.pop_back();
  host_row_.pop_back();

  basis_col_[unit_row] = entering;
  if (unit_row != leave_row) {
    basis_col_[leave_row] = displaced;
    for (std::size_t q = 0; q < core_cols_.size(); ++q)
      if (core_cols_[q] == displaced) host_row_[q] = leave_row;
  } else if (displaced != dropped_col) {
    throw internal_error("inconsistent shrink bookkeeping");
  }
  return true;
}

// Unit basic replaces a unit basic on another row: A_xx swaps one core row
// for another, a rank-1 row change.
bool Simplex::update_swap_units(int entering, int leave_row) {
  const int unit_row = cols_[entering].unit_row;
  if (unit_row == leave_row) {  // same row: the core is untouched
    basis_col_[leave_row] = entering;
    return true;
  }
  if (pos_in_core_[unit_row] < 0)
    throw internal_error("entering unit column on a non-core row");
  const int k = static_cast<int>(core_rows_.size());
  int pr = pos_in_core_[unit_row];
  Eigen::VectorXd delta(k);
  for (int q = 0; q < k; ++q)
    delta(q) = coeff(leave_row, core_cols_[q]) - coeff(unit_row, core_cols_[q]);
  Eigen::VectorXd di = inv_.transpose() * delta;  // (delta' inv)'
  double denom = 1.0 + di(pr);
  if (std::fabs(denom) < kUpdateTol) return false;
  Eigen::VectorXd col_p = inv_.col(pr);
  inv_.noalias() -= col_p * (di.transpose() / denom);

  core_rows_[pr] = leave_row;
  pos_in_core_[unit_row] = -1;
  pos_in_core_[leave_row] = pr;
  int displaced = basis_col_[unit_row];
  basis_col_[unit_row] = entering;
  basis_col_[leave_row] = displaced;
  for (std::size_t q = 0; q < core_cols_.size(); ++q)
    if (core_cols_[q] == displaced) host_row_[q] = leave_row;
  return true;
}

// Residual of one random column of A_xx * inv against the identity; cheap
// drift detector for the incrementally maintained inverse.
bool Simplex::inverse_is_fresh() const {
  const int k = static_cast<int>(core_rows_.size());
  if (k == 0) return true;
  int probe = updates_since_refactor_ % k;
  Eigen::VectorXd x = inv_.col(probe);
  Eigen::VectorXd residual = Eigen::VectorXd::Zero(k);
  residual(probe) = -1.0;
  for (int q = 0; q < k; ++q) {
    if (x(q) == 0.0) continue;
    for (auto [r, a] : cols_[core_cols_[q]].entries)
      if (pos_in_core_[r] >= 0) residual(pos_in_core_[r]) += a * x(q);
  }
  return residual.lpNorm<Eigen::Infinity>() < 1e-7;
}

void Simplex::apply_basis_change(int entering, int leave_row) {
  if (++updates_since_refactor_ >= kRefactorInterval) {
    basis_col_[leave_row] = entering;
    refactor();
    return;
  }
  bool entering_unit = cols_[entering].unit;
  bool leaving_unit = cols_[basis_col_[leave_row]].unit;
  int kind;
  bool updated;
  if (!entering_unit && !leaving_unit) {
    kind = 0;
    updated = update_replace_column(entering, leave_row);
  } else if (!entering_unit && leaving_unit) {
    kind = 1;
    updated = update_grow(entering, leave_row);
  } else if (entering_unit && !leaving_unit) {
    kind = 2;
    updated = update_shrink(entering, leave_row);
  } else {
    kind = 3;
    updated = update_swap_units(entering, leave_row);
  }
#ifdef LGC_SIMPLEX_VERIFY
  if (updated) {
    const int k = static_cast<int>(core_rows_.size());
    Eigen::MatrixXd axx = Eigen::MatrixXd::Zero(k, k);
    for (int q = 0; q < k; ++q)
      for (auto [r, a] : cols_[core_cols_[q]].entries)
        if (pos_in_core_[r] >= 0) axx(pos_in_core_[r], q) += a;
    double err = (axx * inv_ - Eigen::MatrixXd::Identity(k, k))
                     .cwiseAbs()
                     .maxCoeff();
    for (int q = 0; q < k; ++q) {
      if (basis_col_[host_row_[q]] != core_cols_[q])
        std::fprintf(stderr, "VERIFY pairing broken kind=%d q=%d\n", kind, q);
    }
    if (err > 1e-6 || !std::isfinite(err)) {
      std::fprintf(stderr, "VERIFY kind=%d k=%d err=%g iter=%d\n", kind, k,
                   err, iterations_);
      std::abort();
    }
  }
#endif
  if (updated && !inverse_is_fresh()) {
    updated = false;  // drift detected, rebuild from the new basis
  }
  (void)kind;
  if (!updated) {
    if (state_[basis_col_[leave_row]] != ColState::basic)
      basis_col_[leave_row] = entering;  // bookkeeping not applied yet
    refactor();
  }
}

// One simplex step. Returns false when the phase is optimal.
bool Simplex::iterate(bool phase1, bool bland, bool& unbounded,
                      bool& progressed) {
  std::vector<double> cb(rows_);
  for (int r = 0; r < rows_; ++r) {
    const Column& col = cols_[basis_col_[r]];
    cb[r] = phase1 ? (col.artificial ? 1.0 : 0.0) : col.cost;
  }
  std::vector<double> y;
  btran(cb, y);
  int entering = price(y, phase1, bland);
  if (entering < 0) return false;

  std::vector<double> z;
  column_dense(entering, z);
  ftran(z);

  const double dir = state_[entering] == ColState::at_lower ? 1.0 : -1.0;
  const Column& ecol = cols_[entering];
  double span = ecol.upper - ecol.lower;  // may be inf

  // Harris two-pass ratio test. Pass 1 finds the largest step any basic
  // tolerates with its bound relaxed by kFeasSlack; pass 2 picks, among the
  // rows blocking within that ceiling, the one with the largest pivot.
  // Tiny pivots breed ill-conditioned bases, which is why the strict
  // minimum-ratio rule is not used directly.
  constexpr double kFeasSlack = 1e-7;
  double ceiling = span;
  for (int r = 0; r < rows_; ++r) {
    double rate = dir * z[r];
    if (std::fabs(rate) < kPivotTol) continue;
    int b = basis_col_[r];
    double relaxed;
    if (rate > 0.0) {
      if (cols_[b].lower == -kInfinity) continue;
      relaxed = (value_[b] - cols_[b].lower + kFeasSlack) / rate;
    } else {
      if (cols_[b].upper == kInfinity) continue;
      relaxed = (value_[b] - cols_[b].upper - kFeasSlack) / rate;
    }
    ceiling = std::min(ceiling, std::max(relaxed, 0.0));
  }

  int leave_row = -1;
  double limit = ceiling;
  double best_pivot = 0.0;
  for (int r = 0; r < rows_; ++r) {
    double rate = dir * z[r];
    if (std::fabs(rate) < kPivotTol) continue;
    int b = basis_col_[r];
    double step;
    if (rate > 0.0) {
      if (cols_[b].lower == -kInfinity) continue;
      step = (value_[b] - cols_[b].lower) / rate;
    } else {
      if (cols_[b].upper == kInfinity) continue;
      step = (value_[b] - cols_[b].upper) / rate;
    }
    if (step < 0.0) step = 0.0;  // round-off drift
    if (step > ceiling) continue;
    bool better = leave_row < 0 ||
                  (bland ? basis_col_[r] < basis_col_[leave_row]
                         : std::fabs(z[r]) > best_pivot);
    if (better) {
      leave_row = r;
      best_pivot = std::fabs(z[r]);
      limit = step;
    }
  }

  if (leave_row < 0 && !std::isfinite(limit)) {
    unbounded = true;
    return false;
  }
  if (leave_row < 0) limit = span;  // nothing blocks before the far bound

  progressed = limit > 1e-10;
  for (int r = 0; r < rows_; ++r)
    if (z[r] != 0.0) value_[basis_col_[r]] -= dir * limit * z[r];

  if (leave_row < 0) {
    // bound flip
    value_[entering] = dir > 0 ? ecol.upper : ecol.lower;
    state_[entering] = dir > 0 ? ColState::at_upper : ColState::at_lower;
    return true;
  }

  int leaving = basis_col_[leave_row];
  double rate = dir * z[leave_row];
  if (rate > 0.0) {
    value_[leaving] = cols_[leaving].lower;
    state_[leaving] = ColState::at_lower;
  } else {
    value_[leaving] = cols_[leaving].upper;
    state_[leaving] = ColState::at_upper;
  }
  value_[entering] = (dir > 0 ? ecol.lower : ecol.upper) + dir * limit;
  state_[entering] = ColState::basic;
  apply_basis_change(entering, leave_row);
  if ((iterations_ & 255) == 0) recompute_basics();
  return true;
}

double Simplex::phase_objective(bool phase1) const {
  double obj = 0.0;
  for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
    double cost = phase1 ? (cols_[c].artificial ? 1.0 : 0.0) : cols_[c].cost;
    if (cost != 0.0) obj += cost * value_[c];
  }
  return obj;
}

void Simplex::drive_out_artificials() {
  for (int r = 0; r < rows_; ++r) {
    if (!cols_[basis_col_[r]].artificial) continue;
    std::vector<double> er(rows_, 0.0);
    er[r] = 1.0;
    std::vector<double> y;
    btran(er, y);
    int replacement = -1;
    double best = 1e-7;
    for (int c = 0; c < static_cast<int>(cols_.size()); ++c) {
      if (cols_[c].artificial || state_[c] == ColState::basic) continue;
      // fixed columns stay nonbasic so their values remain bit-exact
      if (cols_[c].lower == cols_[c].upper) continue;
      double t = 0.0;
      for (auto [row, a] : cols_[c].entries) t += a * y[row];
      if (std::fabs(t) > best) {
        best = std::fabs(t);
        replacement = c;
      }
    }
    if (replacement < 0) continue;  // dependent row; artificial stays at 0
    int artificial = basis_col_[r];
    state_[replacement] = ColState::basic;
    state_[artificial] = ColState::at_lower;
    value_[artificial] = 0.0;
    basis_col_[r] = replacement;
    refactor();
    recompute_basics();
  }
  // artificials may never move again
  for (Column& col : cols_)
    if (col.artificial) col.lower = col.upper = 0.0;
}

LpSolution Simplex::run() {
  LpSolution sol;

  for (const LpVariable& v : lp_.variables()) {
    if (v.lower > v.upper) {
      sol.status = SolveStatus::infeasible;
      return sol;
    }
  }

  build_columns();
  initial_basis();
  refactor();
  recompute_basics();

  bool has_artificials = false;
  for (const Column& c : cols_) has_artificials |= c.artificial;

  double rhs_scale = 1.0;
  for (double b : rhs_) rhs_scale = std::max(rhs_scale, std::fabs(b));

  for (int phase = has_artificials ? 1 : 2; phase <= 2; ++phase) {
    bool phase1 = phase == 1;
    bool bland = false;
    int degenerate_run = 0;
    while (true) {
      if (++iterations_ > kMaxIterations)
        throw internal_error("simplex iteration limit exceeded");
      bool unbounded = false;
      bool progressed = false;
      if (!iterate(phase1, bland, unbounded, progressed)) {
        if (unbounded) {
          if (phase1) throw internal_error("phase 1 cannot be unbounded");
          sol.status = SolveStatus::unbounded;
          sol.iterations = iterations_;
          return sol;
        }
        break;
      }
      if (progressed) {
        degenerate_run = 0;
        bland = false;
      } else if (++degenerate_run > kDegenerateLimit) {
        bland = true;
      }
    }
    if (phase1) {
      refactor();
      recompute_basics();
      if (phase_objective(true) > 1e-7 * rhs_scale) {
        sol.status = SolveStatus::infeasible;
        sol.iterations = iterations_;
        return sol;
      }
      drive_out_artificials();
    }
  }

  refactor();
  recompute_basics();

  sol.status = SolveStatus::optimal;
  sol.iterations = iterations_;
  sol.values.resize(lp_.variable_count());
  for (int j = 0; j < lp_.variable_count(); ++j) {
    auto [pos, neg] = var_cols_[j];
    sol.values[j] = value_[pos] - (neg >= 0 ? value_[neg] : 0.0);
    if (!std::isfinite(sol.values[j]))
      throw internal_error("simplex produced a non-finite value");
  }
  double obj = 0.0;
  for (int j = 0; j < lp_.variable_count(); ++j)
    obj += lp_.objective()[j] * sol.values[j];
  sol.objective = obj;

  double worst = 0.0;
  for (const LpConstraint& row : lp_.constraints()) {
    double act = 0.0, magnitude = std::fabs(row.rhs);
    for (const LinearTerm& t : row.terms) {
      act += t.coeff * sol.values[t.var];
      magnitude += std::fabs(t.coeff * sol.values[t.var]);
    }
    double viol = 0.0;
    switch (row.rel) {
      case Relation::le: viol = act - row.rhs; break;
      case Relation::ge: viol = row.rhs - act; break;
      case Relation::eq: viol = std::fabs(act - row.rhs); break;
    }
    if (viol > 0.0) worst = std::max(worst, viol / (1.0 + magnitude));
  }
  for (int j = 0; j < lp_.variable_count(); ++j) {
    const LpVariable& v = lp_.variables()[j];
    double x = sol.values[j];
    double viol = std::max(v.lower - x, x - v.upper);
    if (viol > 0.0) worst = std::max(worst, viol / (1.0 + std::fabs(x)));
  }
  sol.max_violation = worst;
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) { return Simplex(lp).run(); }

}  // namespace lgc
