#include "lgc/lp.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "lgc/errors.hpp"

namespace lgc {

int LinearProgram::add_variable(std::string name, double lower, double upper) {
  if (std::isnan(lower) || std::isnan(upper))
    throw contract_error("variable bound is NaN");
  variables_.push_back({std::move(name), lower, upper});
  objective_.push_back(0.0);
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::add_constraint(std::string name,
                                   std::vector<LinearTerm> terms, Relation rel,
                                   double rhs) {
  if (!std::isfinite(rhs)) throw contract_error("constraint rhs must be finite");
  for (const LinearTerm& t : terms) {
    if (t.var < 0 || t.var >= variable_count())
      throw contract_error("constraint references undeclared variable");
    if (!std::isfinite(t.coeff))
      throw contract_error("constraint coefficient must be finite");
  }
  constraints_.push_back({std::move(name), std::move(terms), rel, rhs});
}

void LinearProgram::set_objective(Sense sense,
                                  std::vector<double> coefficients) {
  if (static_cast<int>(coefficients.size()) != variable_count())
    throw contract_error("objective size does not match variable count");
  for (double c : coefficients)
    if (!std::isfinite(c)) throw contract_error("objective coefficient must be finite");
  sense_ = sense;
  objective_ = std::move(coefficients);
}

void LinearProgram::set_objective_coefficient(int var, double coeff) {
  if (var < 0 || var >= variable_count())
    throw contract_error("objective references undeclared variable");
  if (!std::isfinite(coeff))
    throw contract_error("objective coefficient must be finite");
  objective_[var] = coeff;
}

void LinearProgram::restrict_bounds(int var, double lower, double upper) {
  if (var < 0 || var >= variable_count())
    throw contract_error("bound on undeclared variable");
  LpVariable& v = variables_[var];
  v.lower = std::max(v.lower, lower);
  v.upper = std::min(v.upper, upper);
}

namespace {

void print_number(std::ostream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void print_terms(std::ostream& out, const LinearProgram& lp,
                 const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const LinearTerm& t : terms) {
    double c = t.coeff;
    if (first) {
      if (c < 0) out << "- ";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    print_number(out, std::fabs(c));
    out << ' ' << lp.variables()[t.var].name;
  }
  if (first) out << "0";  // constraint with no terms
}

}  // namespace

void write_lp(const LinearProgram& lp, std::ostream& out) {
  out << (lp.sense() == Sense::minimize ? "Minimize" : "Maximize") << '\n';
  out << " obj:";
  bool any = false;
  for (int j = 0; j < lp.variable_count(); ++j) {
    double c = lp.objective()[j];
    if (c == 0.0) continue;
    out << (any ? (c < 0 ? " - " : " + ") : (c < 0 ? " - " : " "));
    print_number(out, std::fabs(c));
    out << ' ' << lp.variables()[j].name;
    any = true;
  }
  if (!any) out << " 0";
  out << "\nSubject To\n";
  for (const LpConstraint& row : lp.constraints()) {
    out << ' ' << row.name << ": ";
    print_terms(out, lp, row.terms);
    switch (row.rel) {
      case Relation::le: out << " <= "; break;
      case Relation::eq: out << " = "; break;
      case Relation::ge: out << " >= "; break;
    }
    print_number(out, row.rhs);
    out << '\n';
  }
  out << "Bounds\n";
  for (const LpVariable& v : lp.variables()) {
    out << ' ';
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      out << v.name << " free";
    } else if (v.lower == v.upper) {
      out << v.name << " = ";
      print_number(out, v.lower);
    } else {
      if (v.lower == -kInfinity)
        out << "-inf";
      else
        print_number(out, v.lower);
      out << " <= " << v.name << " <= ";
      if (v.upper == kInfinity)
        out << "+inf";
      else
        print_number(out, v.upper);
    }
    out << '\n';
  }
  out << "End\n";
}

namespace {

struct LpTokenizer {
  std::istream& in;
  std::string pending;

  bool next(std::string& tok) {
    if (!pending.empty()) {
      tok = std::move(pending);
      pending.clear();
      return true;
    }
    while (in >> tok) {
      if (tok[0] == '\\') {  // comment to end of line
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return true;
    }
    return false;
  }

  void push_back(std::string tok) { pending = std::move(tok); }
};

bool parse_value(const std::string& tok, double& out) {
  if (tok == "+inf" || tok == "inf") {
    out = kInfinity;
    return true;
  }
  if (tok == "-inf") {
    out = -kInfinity;
    return true;
  }
  try {
    std::size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

LinearProgram read_lp(std::istream& in) {
  LpTokenizer tz{in, {}};
  std::string tok;
  if (!tz.next(tok)) throw parse_error("empty lp file");
  Sense sense;
  if (tok == "Minimize")
    sense = Sense::minimize;
  else if (tok == "Maximize")
    sense = Sense::maximize;
  else
    throw parse_error("lp file must start with Minimize or Maximize");

  LinearProgram lp;
  std::vector<std::pair<std::string, double>> objective_terms;
  struct PendingRow {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    Relation rel;
    double rhs;
  };
  std::vector<PendingRow> rows;

  // objective terms until "Subject"
  auto read_terms = [&tz](std::vector<std::pair<std::string, double>>& terms,
                          std::string& stop_tok) {
    double sign = 1.0;
    std::string t;
    while (tz.next(t)) {
      if (t == "+" || t == "-") {
        sign = (t == "-") ? -sign : sign;
        continue;
      }
      double value;
      if (parse_value(t, value)) {
        std::string name;
        if (!tz.next(name)) {
          // trailing bare number (objective constant 0)
          stop_tok.clear();
          return;
        }
        double ignored;
        if (name == "+" || name == "-" || parse_value(name, ignored) ||
            name == "Subject" || name == "Bounds" || name == "End" ||
            name.back() == ':') {
          tz.push_back(name);  // bare constant, not a term
          sign = 1.0;
          continue;
        }
        terms.emplace_back(name, sign * value);
      } else if (t == "Subject" || t == "Bounds" || t == "End" ||
                 (!t.empty() && t.back() == ':') || t == "<=" || t == ">=" ||
                 t == "=") {
        stop_tok = t;
        return;
      } else {
        terms.emplace_back(t, sign);  // implicit coefficient 1
      }
      sign = 1.0;
    }
    stop_tok.clear();
  };

  // optional objective label "obj:"
  if (!tz.next(tok)) throw parse_error("truncated lp file");
  if (tok.empty() || tok.back() != ':') tz.push_back(tok);

  std::string stop;
  read_terms(objective_terms, stop);
  if (stop != "Subject") throw parse_error("lp file missing 'Subject To'");
  if (!tz.next(tok) || tok != "To") throw parse_error("expected 'Subject To'");

  // constraint rows until Bounds/End
  while (true) {
    if (!tz.next(tok)) throw parse_error("lp file missing End");
    if (tok == "Bounds" || tok == "End") break;
    if (tok.empty() || tok.back() != ':')
      throw parse_error("constraint must start with 'name:', got '" + tok + "'");
    PendingRow row;
    row.name = tok.substr(0, tok.size() - 1);
    std::string stop_tok;
    read_terms(row.terms, stop_tok);
    if (stop_tok == "<=")
      row.rel = Relation::le;
    else if (stop_tok == ">=")
      row.rel = Relation::ge;
    else if (stop_tok == "=")
      row.rel = Relation::eq;
    else
      throw parse_error("constraint '" + row.name + "' missing relation");
    if (!tz.next(tok) || !parse_value(tok, row.rhs))
      throw parse_error("constraint '" + row.name + "' missing rhs");
    rows.push_back(std::move(row));
  }

  // collect variables in first-use order
  std::vector<std::string> var_names;
  auto var_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < var_names.size(); ++i)
      if (var_names[i] == name) return static_cast<int>(i);
    var_names.push_back(name);
    return static_cast<int>(var_names.size()) - 1;
  };
  for (auto& [name, coeff] : objective_terms) var_index(name);
  for (auto& row : rows)
    for (auto& [name, coeff] : row.terms) var_index(name);

  struct Box {
    double lower = 0.0, upper = kInfinity;
    bool touched = false;
  };
  std::vector<Box> boxes(var_names.size());

  if (tok == "Bounds") {
    while (true) {
      if (!tz.next(tok)) throw parse_error("lp file missing End");
      if (tok == "End") break;
      double lo;
      if (parse_value(tok, lo)) {
        // "lo <= name <= hi"
        std::string rel1, name, rel2, hi_tok;
        if (!tz.next(rel1) || rel1 != "<=" || !tz.next(name) ||
            !tz.next(rel2) || rel2 != "<=" || !tz.next(hi_tok))
          throw parse_error("bad bounds line");
        double hi;
        if (!parse_value(hi_tok, hi)) throw parse_error("bad bound value");
        int j = var_index(name);
        if (boxes.size() < var_names.size()) boxes.resize(var_names.size());
        boxes[j] = {lo, hi, true};
      } else {
        // "name free" or "name = v" or "name <= v" / "name >= v"
        std::string name = tok;
        int j = var_index(name);
        if (boxes.size() < var_names.size()) boxes.resize(var_names.size());
        std::string op;
        if (!tz.next(op)) throw parse_error("truncated bounds line");
        if (op == "free") {
          boxes[j] = {-kInfinity, kInfinity, true};
        } else {
          std::string val_tok;
          double value;
          if (!tz.next(val_tok) || !parse_value(val_tok, value))
            throw parse_error("bad bound value");
          if (op == "=")
            boxes[j] = {value, value, true};
          else if (op == "<=")
            boxes[j] = {0.0, value, true};
          else if (op == ">=")
            boxes[j] = {value, kInfinity, true};
          else
            throw parse_error("bad bounds operator '" + op + "'");
        }
      }
    }
  }

  for (std::size_t j = 0; j < var_names.size(); ++j)
    lp.add_variable(var_names[j], boxes[j].lower, boxes[j].upper);
  std::vector<double> objective(var_names.size(), 0.0);
  for (auto& [name, coeff] : objective_terms) objective[var_index(name)] += coeff;
  lp.set_objective(sense, std::move(objective));
  for (auto& row : rows) {
    std::vector<LinearTerm> terms;
    terms.reserve(row.terms.size());
    for (auto& [name, coeff] : row.terms) terms.push_back({var_index(name), coeff});
    lp.add_constraint(row.name, std::move(terms), row.rel, row.rhs);
  }
  return lp;
}

}  // namespace lgc
