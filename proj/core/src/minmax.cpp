#include "lgc/minmax.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "lgc/errors.hpp"
#include "lgc/oracle.hpp"

namespace lgc {

namespace {
constexpr double kTau = 1e-7;
}

EdgeClassification classify_edges(const SignedGraph& graph,
                                  const MetricSolution& metric) {
  if (metric.n != graph.vertex_count())
    throw contract_error("metric does not match the graph");
  const double short_threshold = 1.0 / std::sqrt(graph.vertex_count());
  const double long_threshold = 1.0 - short_threshold;
  EdgeClassification out;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const SignedEdge& edge = graph.edge(e);
    double d = metric.distance(edge.u, edge.v);
    if (edge.sign == Sign::plus) {
      // values within tau of the threshold count as not bad
      if (d < short_threshold - kTau) out.plus_bad.push_back(e);
      if (d <= kTau) out.plus_zero.push_back(e);
    } else {
      if (d > long_threshold + kTau) out.minus_bad.push_back(e);
    }
  }
  return out;
}

std::vector<double> candidate_cmax_values(const SignedGraph& graph) {
  std::set<double> weights;
  weights.insert(0.0);
  for (const SignedEdge& e : graph.edges()) weights.insert(e.weight);
  return {weights.begin(), weights.end()};
}

LayerDecomposition zero_one_layers(const SignedGraph& graph,
                                   const EdgeClassification& classes,
                                   int source, const std::vector<char>& live) {
  const int n = graph.vertex_count();
  if (source < 0 || source >= n) throw contract_error("source out of range");
  if (!live.empty() && (static_cast<int>(live.size()) != n || !live[source]))
    throw contract_error("source must be live");

  std::vector<char> zero(graph.edge_count(), 0);
  for (int e : classes.plus_zero) zero[e] = 1;

  // adjacency restricted to live plus_bad edges
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, length)
  for (int e : classes.plus_bad) {
    const SignedEdge& edge = graph.edge(e);
    if (!live.empty() && (!live[edge.u] || !live[edge.v])) continue;
    int len = zero[e] ? 0 : 1;
    adj[edge.u].push_back({edge.v, len});
    adj[edge.v].push_back({edge.u, len});
  }

  LayerDecomposition out;
  out.source = source;
  out.distance.assign(n, -1);
  std::deque<int> queue;
  std::vector<char> settled(n, 0);
  out.distance[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (settled[u]) continue;
    settled[u] = 1;
    for (auto [v, len] : adj[u]) {
      int candidate = out.distance[u] + len;
      if (out.distance[v] == -1 || candidate < out.distance[v]) {
        out.distance[v] = candidate;
        if (len == 0)
          queue.push_front(v);
        else
          queue.push_back(v);
      }
    }
  }

  int radius = 0;
  for (int u = 0; u < n; ++u) radius = std::max(radius, out.distance[u]);
  out.layers.assign(radius + 1, {});
  for (int u = 0; u < n; ++u)
    if (out.distance[u] >= 0) out.layers[out.distance[u]].push_back(u);
  return out;
}

int choose_level_cut(const LayerDecomposition& layers, int n) {
  if (n < 4) throw contract_error("level cut needs n >= 4");
  const double root = std::sqrt(static_cast<double>(n));
  const int j_max = static_cast<int>(std::floor((root - 1.0) / 2.0 + 1e-12));
  const double limit = 16.0 * root;
  auto size_of = [&layers](int j) {
    return j < static_cast<int>(layers.layers.size())
               ? static_cast<int>(layers.layers[j].size())
               : 0;
  };
  for (int j = 0; j <= j_max; ++j) {
    if (size_of(j) <= limit && size_of(j + 1) <= limit && size_of(j + 2) <= limit)
      return j;
  }
  throw internal_error("no valid level cut found; this contradicts the layer "
                       "counting bound for n >= 4");
}

LayeredOutcome layered_clustering(const SignedGraph& graph, double c_max) {
  const int n = graph.vertex_count();
  if (n < 4) throw contract_error("layered clustering needs n >= 4");

  LayeredOutcome out;
  out.pins = heavy_edge_pins(graph, c_max);
  auto metric = solve_disagreement_metric(graph, Aggregate::max, out.pins);
  if (!metric) return out;  // guess was too small
  out.metric = std::move(*metric);
  out.classes = classify_edges(graph, *out.metric);

  // connected components of the bad-+ graph, visited by smallest vertex id
  std::vector<std::vector<int>> bad_adj(n);
  for (int e : out.classes.plus_bad) {
    bad_adj[graph.edge(e).u].push_back(graph.edge(e).v);
    bad_adj[graph.edge(e).v].push_back(graph.edge(e).u);
  }
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({});
    std::vector<int> stack{root};
    component[root] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members[id].push_back(u);
      for (int v : bad_adj[u])
        if (component[v] < 0) {
          component[v] = id;
          stack.push_back(v);
        }
    }
  }

  std::vector<int> labels(n, -1);
  int next_label = 0;
  std::vector<char> live(n, 0);
  for (const std::vector<int>& comp : members) {
    for (int u : comp) live[u] = 1;
    int live_count = static_cast<int>(comp.size());
    while (true) {
      int pair_edge = -1;
      for (int e : out.classes.minus_bad) {
        if (live[graph.edge(e).u] && live[graph.edge(e).v]) {
          pair_edge = e;
          break;
        }
      }
      if (pair_edge < 0) break;
      LayeredIteration it;
      it.pair_edge = pair_edge;
      it.source = graph.edge(pair_edge).u;
      it.layers = zero_one_layers(graph, out.classes, it.source, live);
      it.j_star = choose_level_cut(it.layers, n);
      for (int j = 0; j <= it.j_star && j < static_cast<int>(it.layers.layers.size()); ++j)
        for (int u : it.layers.layers[j]) it.cluster.push_back(u);
      for (int u : it.cluster) {
        labels[u] = next_label;
        live[u] = 0;
      }
      live_count -= static_cast<int>(it.cluster.size());
      ++next_label;
      out.iterations.push_back(std::move(it));
    }
    if (live_count > 0) {
      for (int u : comp)
        if (live[u]) {
          labels[u] = next_label;
          live[u] = 0;
        }
      ++next_label;
    }
  }

  out.feasible = true;
  out.clustering = Clustering(std::move(labels));
  return out;
}

MinMaxResult solve_minmax(const SignedGraph& graph, int jobs) {
  if (jobs < 1) throw contract_error("jobs must be positive");
  const int n = graph.vertex_count();
  if (n < 4) {
    // the layer counting argument needs n >= 4; tiny instances are exact
    OracleResult exact = exact_min_local_disagreements(graph, Aggregate::max);
    double worst_missed = 0.0;
    for (const SignedEdge& e : graph.edges()) {
      bool together = exact.clustering.same_cluster(e.u, e.v);
      bool wrong = e.sign == Sign::plus ? !together : together;
      if (wrong) worst_missed = std::max(worst_missed, e.weight);
    }
    return {exact.clustering, exact.value, worst_missed};
  }

  std::vector<double> candidates = candidate_cmax_values(graph);
  std::vector<std::optional<std::pair<Clustering, double>>> results(
      candidates.size());

  auto evaluate = [&graph, &candidates, &results](std::size_t i) {
    LayeredOutcome outcome = layered_clustering(graph, candidates[i]);
    if (!outcome.feasible) return;
    double value = evaluate_objective(
        Aggregate::max, disagreement_vector(graph, *outcome.clustering));
    results[i] = {{*outcome.clustering, value}};
  };

  if (jobs == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&]() {
      try {
        for (std::size_t i = cursor.fetch_add(1); i < candidates.size();
             i = cursor.fetch_add(1))
          evaluate(i);
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(candidates.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  int best = -1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!results[i]) continue;
    if (best < 0 || results[i]->second < results[best]->second)
      best = static_cast<int>(i);
  }
  if (best < 0)
    throw internal_error("every c_max guess infeasible; the largest guess "
                         "pins nothing and must be feasible");
  return {results[best]->first, results[best]->second, candidates[best]};
}

}  // namespace lgc
