#pragma once

#include <utility>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

enum class CutKind : std::uint8_t { st, multiway, multicut };

/// Classical min-max cut problem over a plain weighted graph. The base
/// graph is stored with all edges labeled + so it can reuse SignedGraph
/// validation; separation requirements live next to it.
class CutProblem {
 public:
  static CutProblem st_cut(SignedGraph base, int s, int t);
  static CutProblem multiway(SignedGraph base, std::vector<int> terminals);
  static CutProblem multicut(SignedGraph base,
                             std::vector<std::pair<int, int>> pairs);

  const SignedGraph& base() const { return base_; }
  CutKind kind() const { return kind_; }
  int source() const { return s_; }
  int sink() const { return t_; }
  const std::vector<int>& terminals() const { return terminals_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// All vertex pairs that a feasible solution must separate.
  std::vector<std::pair<int, int>> separation_pairs() const;

 private:
  CutProblem(SignedGraph base, CutKind kind);

  SignedGraph base_;
  CutKind kind_;
  int s_ = -1, t_ = -1;
  std::vector<int> terminals_;
  std::vector<std::pair<int, int>> pairs_;
};

struct EncodedInstance {
  SignedGraph graph;
  double big_weight;  // W = 1 + total base weight; stands in for infinity
};

/// Encodes the cut problem as correlation clustering: base edges become +,
/// every pair to separate gets a - edge of weight W. Rejected if a base
/// edge joins a pair that must be separated.
EncodedInstance encode(const CutProblem& problem);

struct CutValue {
  bool violation = false;
  int violated_a = -1, violated_b = -1;  // first co-clustered pair
  double value = 0.0;                    // max per-vertex cut incidence
  std::vector<double> incidence;         // per-vertex cut incidence weights
};

/// Reads a clustering back as a cut of the base graph.
CutValue decode(const Clustering& clustering, const CutProblem& problem);

}  // namespace lgc
