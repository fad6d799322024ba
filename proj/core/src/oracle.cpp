#include "lgc/oracle.hpp"

#include <algorithm>
#include <string>

#include "lgc/errors.hpp"

namespace lgc {

PartitionIterator::PartitionIterator(int n) {
  if (n < 1) throw contract_error("partitions need n >= 1");
  labels_.assign(n, 0);
  max_prefix_.assign(n, 0);
}

bool PartitionIterator::next() {
  const int n = static_cast<int>(labels_.size());
  for (int i = n - 1; i >= 1; --i) {
    if (labels_[i] <= max_prefix_[i - 1]) {
      ++labels_[i];
      max_prefix_[i] = std::max(max_prefix_[i - 1], labels_[i]);
      for (int j = i + 1; j < n; ++j) {
        labels_[j] = 0;
        max_prefix_[j] = max_prefix_[i];
      }
      return true;
    }
  }
  return false;
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw contract_error("bell_number supports 0 <= n <= 25");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

namespace {

constexpr int kPartitionGuard = 12;  // B(12) ~ 4.2M partitions
constexpr int kSubsetGuard = 20;

void check_partition_guard(int n, const char* what) {
  if (n > kPartitionGuard)
    throw contract_error(std::string(what) + " refuses n > " +
                         std::to_string(kPartitionGuard) +
                         " (Bell-number guard)");
}

}  // namespace

OracleResult exact_min_local_disagreements(const SignedGraph& graph,
                                           Aggregate objective) {
  if (objective != Aggregate::max && objective != Aggregate::sum)
    throw contract_error("disagreement objective must be max or sum");
  check_partition_guard(graph.vertex_count(), "exact_min_local_disagreements");

  PartitionIterator it(graph.vertex_count());
  double best = -1.0;
  std::vector<int> best_labels;
  do {
    Clustering clustering(it.labels());
    double value =
        evaluate_objective(objective, disagreement_vector(graph, clustering));
    if (best < 0.0 || value < best) {
      best = value;
      best_labels = it.labels();
    }
  } while (it.next());
  return {best, Clustering(std::move(best_labels))};
}

OracleResult exact_max_min_agreements(const SignedGraph& graph) {
  check_partition_guard(graph.vertex_count(), "exact_max_min_agreements");

  PartitionIterator it(graph.vertex_count());
  double best = -1.0;
  std::vector<int> best_labels;
  do {
    Clustering clustering(it.labels());
    double value =
        evaluate_objective(Aggregate::min, agreement_vector(graph, clustering));
    if (value > best) {
      best = value;
      best_labels = it.labels();
    }
  } while (it.next());
  return {best, Clustering(std::move(best_labels))};
}

namespace {

OracleResult exact_st_cut(const CutProblem& problem) {
  const SignedGraph& base = problem.base();
  const int n = base.vertex_count();
  if (n > kSubsetGuard)
    throw contract_error("exact s-t cut refuses n > " +
                         std::to_string(kSubsetGuard));
  const int s = problem.source(), t = problem.sink();

  std::vector<int> others;
  for (int u = 0; u < n; ++u)
    if (u != s && u != t) others.push_back(u);

  double best = -1.0;
  std::vector<int> best_labels;
  std::vector<int> labels(n);
  const std::uint64_t count = 1ULL << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    labels[s] = 0;
    labels[t] = 1;
    for (std::size_t i = 0; i < others.size(); ++i)
      labels[others[i]] = (mask >> i) & 1;
    std::vector<double> incidence(n, 0.0);
    for (const SignedEdge& e : base.edges()) {
      if (labels[e.u] != labels[e.v]) {
        incidence[e.u] += e.weight;
        incidence[e.v] += e.weight;
      }
    }
    double value = *std::max_element(incidence.begin(), incidence.end());
    if (best < 0.0 || value < best) {
      best = value;
      best_labels = labels;
    }
  }
  return {best, Clustering::from_labels(best_labels)};
}

}  // namespace

OracleResult exact_minmax_cut(const CutProblem& problem) {
  if (problem.kind() == CutKind::st) return exact_st_cut(problem);

  const SignedGraph& base = problem.base();
  check_partition_guard(base.vertex_count(), "exact_minmax_cut");
  auto pairs = problem.separation_pairs();

  PartitionIterator it(base.vertex_count());
  double best = -1.0;
  std::vector<int> best_labels;
  do {
    const std::vector<int>& labels = it.labels();
    bool feasible = true;
    for (auto [a, b] : pairs)
      if (labels[a] == labels[b]) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    std::vector<double> incidence(base.vertex_count(), 0.0);
    for (const SignedEdge& e : base.edges()) {
      if (labels[e.u] != labels[e.v]) {
        incidence[e.u] += e.weight;
        incidence[e.v] += e.weight;
      }
    }
    double value = *std::max_element(incidence.begin(), incidence.end());
    if (best < 0.0 || value < best) {
      best = value;
      best_labels = labels;
    }
  } while (it.next());
  if (best < 0.0) throw internal_error("no feasible cut found");
  return {best, Clustering(std::move(best_labels))};
}

}  // namespace lgc
