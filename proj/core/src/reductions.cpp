#include "lgc/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lgc/errors.hpp"

namespace lgc {

CutProblem::CutProblem(SignedGraph base, CutKind kind)
    : base_(std::move(base)), kind_(kind) {
  for (const SignedEdge& e : base_.edges())
    if (e.sign != Sign::plus)
      throw contract_error("cut problem base graph must be unsigned (+ only)");
}

CutProblem CutProblem::st_cut(SignedGraph base, int s, int t) {
  CutProblem p(std::move(base), CutKind::st);
  const int n = p.base_.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n)
    throw contract_error("terminal out of range");
  if (s == t) throw contract_error("s and t must differ");
  p.s_ = s;
  p.t_ = t;
  return p;
}

CutProblem CutProblem::multiway(SignedGraph base, std::vector<int> terminals) {
  CutProblem p(std::move(base), CutKind::multiway);
  const int n = p.base_.vertex_count();
  if (terminals.size() < 2)
    throw contract_error("multiway cut needs at least two terminals");
  std::set<int> seen;
  for (int t : terminals) {
    if (t < 0 || t >= n) throw contract_error("terminal out of range");
    if (!seen.insert(t).second)
      throw contract_error("duplicate terminal " + std::to_string(t));
  }
  p.terminals_ = std::move(terminals);
  return p;
}

CutProblem CutProblem::multicut(SignedGraph base,
                                std::vector<std::pair<int, int>> pairs) {
  CutProblem p(std::move(base), CutKind::multicut);
  const int n = p.base_.vertex_count();
  if (pairs.empty()) throw contract_error("multicut needs at least one pair");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw contract_error("pair vertex out of range");
    if (a == b) throw contract_error("pair endpoints must differ");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw contract_error("duplicate separation pair");
  }
  p.pairs_ = std::move(pairs);
  return p;
}

std::vector<std::pair<int, int>> CutProblem::separation_pairs() const {
  switch (kind_) {
    case CutKind::st:
      return {{s_, t_}};
    case CutKind::multiway: {
      std::vector<std::pair<int, int>> out;
      for (std::size_t i = 0; i < terminals_.size(); ++i)
        for (std::size_t j = i + 1; j < terminals_.size(); ++j)
          out.emplace_back(terminals_[i], terminals_[j]);
      return out;
    }
    case CutKind::multicut:
      return pairs_;
  }
  throw internal_error("unknown cut kind");
}

EncodedInstance encode(const CutProblem& problem) {
  const SignedGraph& base = problem.base();
  std::set<std::pair<int, int>> base_pairs;
  for (const SignedEdge& e : base.edges())
    base_pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});

  double big = 1.0 + base.total_weight();
  std::vector<SignedEdge> edges = base.edges();
  for (auto [a, b] : problem.separation_pairs()) {
    if (base_pairs.count({std::min(a, b), std::max(a, b)}))
      throw contract_error("base edge between a pair that must be separated");
    edges.push_back({a, b, big, Sign::minus});
  }
  return {SignedGraph(base.vertex_count(), std::move(edges)), big};
}

CutValue decode(const Clustering& clustering, const CutProblem& problem) {
  const SignedGraph& base = problem.base();
  if (clustering.vertex_count() != base.vertex_count())
    throw contract_error("clustering does not match the encoded vertex set");
  CutValue out;
  for (auto [a, b] : problem.separation_pairs()) {
    if (clustering.same_cluster(a, b)) {
      out.violation = true;
      out.violated_a = a;
      out.violated_b = b;
      return out;
    }
  }
  out.incidence.assign(base.vertex_count(), 0.0);
  for (const SignedEdge& e : base.edges()) {
    if (!clustering.same_cluster(e.u, e.v)) {
      out.incidence[e.u] += e.weight;
      out.incidence[e.v] += e.weight;
    }
  }
  out.value = out.incidence.empty()
                  ? 0.0
                  : *std::max_element(out.incidence.begin(), out.incidence.end());
  return out;
}

}  // namespace lgc
