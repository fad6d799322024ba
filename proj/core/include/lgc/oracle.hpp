#pragma once

#include <cstdint>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/reductions.hpp"

namespace lgc {

/// Enumerates all set partitions of [0, n) exactly once via restricted
/// growth strings, in lexicographic order starting from the single-cluster
/// partition (all zeros). Memory O(n).
class PartitionIterator {
 public:
  explicit PartitionIterator(int n);

  const std::vector<int>& labels() const { return labels_; }

  /// Advances to the next partition; false once all have been visited.
  bool next();

 private:
  std::vector<int> labels_;
  std::vector<int> max_prefix_;
};

/// Number of set partitions of an n-element set. Exact through n = 25.
std::uint64_t bell_number(int n);

struct OracleResult {
  double value = 0.0;
  Clustering clustering;
};

/// Global optimum of f(disagreement vector) over all partitions.
/// Brute force; refuses n > 12. Ties break to the first partition in
/// enumeration order.
OracleResult exact_min_local_disagreements(const SignedGraph& graph,
                                           Aggregate objective);

/// Global optimum of min(agreement vector) over all partitions; n <= 12.
OracleResult exact_max_min_agreements(const SignedGraph& graph);

/// Optimal min-max cut value. s-t cuts enumerate all 2^(n-2) sides
/// (n <= 20); multiway and multicut enumerate partitions that separate the
/// required pairs (n <= 12).
OracleResult exact_minmax_cut(const CutProblem& problem);

}  // namespace lgc
