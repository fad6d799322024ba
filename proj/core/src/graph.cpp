#include "lgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "lgc/errors.hpp"

namespace lgc {

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw contract_error("graph needs at least one vertex");
  std::unordered_set<long long> seen;
  seen.reserve(edges_.size() * 2);
  for (const SignedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw contract_error("edge endpoint out of range");
    if (e.u == e.v) throw contract_error("self loops are not allowed");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw contract_error("edge weight must be nonnegative and finite");
    long long key = static_cast<long long>(std::min(e.u, e.v)) * n_ +
                    std::max(e.u, e.v);
    if (!seen.insert(key).second)
      throw contract_error("parallel edge between " + std::to_string(e.u) +
                           " and " + std::to_string(e.v));
    total_weight_ += e.weight;
  }

  incident_offsets_.assign(n_ + 1, 0);
  for (const SignedEdge& e : edges_) {
    ++incident_offsets_[e.u + 1];
    ++incident_offsets_[e.v + 1];
  }
  for (int u = 0; u < n_; ++u) incident_offsets_[u + 1] += incident_offsets_[u];
  incident_edges_.resize(edges_.size() * 2);
  std::vector<int> fill(incident_offsets_.begin(), incident_offsets_.end() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    incident_edges_[fill[edges_[i].u]++] = i;
    incident_edges_[fill[edges_[i].v]++] = i;
  }
}

std::span<const int> SignedGraph::incident(int u) const {
  if (u < 0 || u >= n_) throw contract_error("vertex out of range");
  return {incident_edges_.data() + incident_offsets_[u],
          incident_edges_.data() + incident_offsets_[u + 1]};
}

Clustering::Clustering(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw contract_error("clustering over empty vertex set");
  int max_label = -1;
  for (int c : labels_) {
    if (c < 0) throw contract_error("negative cluster label");
    max_label = std::max(max_label, c);
  }
  std::vector<char> used(max_label + 1, 0);
  for (int c : labels_) used[c] = 1;
  for (char f : used)
    if (!f) throw contract_error("cluster labels must be contiguous from 0");
  cluster_count_ = max_label + 1;
}

Clustering Clustering::from_labels(const std::vector<int>& raw) {
  std::vector<int> labels(raw.size());
  std::vector<std::pair<int, int>> remap;  // raw label -> new label
  for (std::size_t u = 0; u < raw.size(); ++u) {
    int found = -1;
    for (const auto& [orig, renamed] : remap)
      if (orig == raw[u]) {
        found = renamed;
        break;
      }
    if (found < 0) {
      found = static_cast<int>(remap.size());
      remap.emplace_back(raw[u], found);
    }
    labels[u] = found;
  }
  return Clustering(std::move(labels));
}

Clustering Clustering::single_cluster(int n) {
  return Clustering(std::vector<int>(n, 0));
}

Clustering Clustering::singletons(int n) {
  std::vector<int> labels(n);
  for (int u = 0; u < n; ++u) labels[u] = u;
  return Clustering(std::move(labels));
}

namespace {

void check_cover(const SignedGraph& graph, const Clustering& clustering) {
  if (clustering.vertex_count() != graph.vertex_count())
    throw contract_error("clustering does not cover the vertex set");
}

}  // namespace

std::vector<double> disagreement_vector(const SignedGraph& graph,
                                        const Clustering& clustering) {
  check_cover(graph, clustering);
  std::vector<double> out(graph.vertex_count(), 0.0);
  for (const SignedEdge& e : graph.edges()) {
    bool together = clustering.same_cluster(e.u, e.v);
    bool wrong = (e.sign == Sign::plus) ? !together : together;
    if (wrong) {
      out[e.u] += e.weight;
      out[e.v] += e.weight;
    }
  }
  return out;
}

std::vector<double> agreement_vector(const SignedGraph& graph,
                                     const Clustering& clustering) {
  check_cover(graph, clustering);
  std::vector<double> out(graph.vertex_count(), 0.0);
  for (const SignedEdge& e : graph.edges()) {
    bool together = clustering.same_cluster(e.u, e.v);
    bool right = (e.sign == Sign::plus) ? together : !together;
    if (right) {
      out[e.u] += e.weight;
      out[e.v] += e.weight;
    }
  }
  return out;
}

std::vector<double> total_incident_weight(const SignedGraph& graph) {
  std::vector<double> out(graph.vertex_count(), 0.0);
  for (const SignedEdge& e : graph.edges()) {
    out[e.u] += e.weight;
    out[e.v] += e.weight;
  }
  return out;
}

double evaluate_objective(Aggregate kind, std::span<const double> values) {
  if (values.empty()) throw contract_error("objective over empty vector");
  switch (kind) {
    case Aggregate::max:
      return *std::max_element(values.begin(), values.end());
    case Aggregate::sum: {
      double s = 0.0;
      for (double v : values) s += v;
      return s;
    }
    case Aggregate::min:
      return *std::min_element(values.begin(), values.end());
  }
  throw internal_error("unknown aggregate");
}

BipartiteSides infer_bipartite_sides(const SignedGraph& graph) {
  const int n = graph.vertex_count();
  BipartiteSides sides;
  sides.side.assign(n, Side::left);
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.assign(1, root);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int e : graph.incident(u)) {
        int v = graph.edge(e).u == u ? graph.edge(e).v : graph.edge(e).u;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          throw contract_error("graph is not bipartite");
        }
      }
    }
  }
  for (int u = 0; u < n; ++u)
    sides.side[u] = color[u] == 0 ? Side::left : Side::right;
  return sides;
}

void validate_bipartite(const SignedGraph& graph, const BipartiteSides& sides) {
  if (static_cast<int>(sides.side.size()) != graph.vertex_count())
    throw contract_error("sides vector does not match vertex count");
  for (const SignedEdge& e : graph.edges())
    if (sides.side[e.u] == sides.side[e.v])
      throw contract_error("edge inside one side of the bipartition");
}

}  // namespace lgc
