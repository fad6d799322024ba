#include "lgc/ballround.hpp"

#include <algorithm>

#include "lgc/errors.hpp"

namespace lgc {

namespace {
constexpr double kRadiusTie = 1e-9;
constexpr double kInnerRadius = 1.0 / 7.0;
constexpr double kOuterRadius = 3.0 / 7.0;

bool inside(const MetricSolution& metric, int center, int v, double radius) {
  return metric.distance(center, v) < radius - kRadiusTie;
}
}  // namespace

std::vector<int> ball(const MetricSolution& metric, std::span<const int> live,
                      int center, double radius) {
  bool center_live = false;
  std::vector<int> out;
  for (int v : live) {
    if (v == center) center_live = true;
    if (inside(metric, center, v, radius)) out.push_back(v);
  }
  if (!center_live) throw contract_error("ball center must be live");
  return out;
}

Clustering greedy_clustering_complete(const MetricSolution& metric) {
  const int n = metric.n;
  std::vector<int> live(n);
  for (int u = 0; u < n; ++u) live[u] = u;

  std::vector<int> labels(n, -1);
  int next_label = 0;
  while (!live.empty()) {
    int best = -1, best_count = -1;
    for (int s : live) {  // ascending ids, so ties keep the smallest
      int count = 0;
      for (int v : live)
        if (inside(metric, s, v, kInnerRadius)) ++count;
      if (count > best_count) {
        best_count = count;
        best = s;
      }
    }
    std::vector<int> cluster = ball(metric, live, best, kOuterRadius);
    for (int u : cluster) labels[u] = next_label;
    ++next_label;
    std::vector<int> remaining;
    remaining.reserve(live.size() - cluster.size());
    for (int u : live)
      if (labels[u] < 0) remaining.push_back(u);
    live = std::move(remaining);
  }
  return Clustering(std::move(labels));
}

Clustering greedy_clustering_bipartite(const MetricSolution& metric,
                                       const BipartiteSides& sides) {
  const int n = metric.n;
  if (static_cast<int>(sides.side.size()) != n)
    throw contract_error("sides do not match the metric");

  std::vector<int> live(n);
  for (int u = 0; u < n; ++u) live[u] = u;

  std::vector<int> labels(n, -1);
  int next_label = 0;
  while (true) {
    int best = -1, best_count = -1;
    for (int s : live) {
      if (!sides.is_left(s)) continue;
      int count = 0;
      for (int v : live)
        if (!sides.is_left(v) && inside(metric, s, v, kInnerRadius)) ++count;
      if (count > best_count) {
        best_count = count;
        best = s;
      }
    }
    if (best < 0) break;  // no live left vertex remains
    std::vector<int> cluster = ball(metric, live, best, kOuterRadius);
    for (int u : cluster) labels[u] = next_label;
    ++next_label;
    std::vector<int> remaining;
    remaining.reserve(live.size() - cluster.size());
    for (int u : live)
      if (labels[u] < 0) remaining.push_back(u);
    live = std::move(remaining);
  }
  for (int u : live) labels[u] = next_label++;  // leftover right vertices
  return Clustering(std::move(labels));
}

}  // namespace lgc
