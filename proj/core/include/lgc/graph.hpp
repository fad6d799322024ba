#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lgc {

enum class Sign : std::uint8_t { plus, minus };

struct SignedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
  Sign sign = Sign::plus;
};

/// Immutable weighted graph with +/- labeled edges. Vertices are dense ids
/// in [0, n). At most one edge per unordered vertex pair, no self loops,
/// weights nonnegative and finite. Endpoint order of an edge is preserved
/// as given by the caller.
class SignedGraph {
 public:
  SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  const SignedEdge& edge(int index) const { return edges_[index]; }

  /// Indices of edges incident on u.
  std::span<const int> incident(int u) const;

  double total_weight() const { return total_weight_; }

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<int> incident_offsets_;
  std::vector<int> incident_edges_;
  double total_weight_ = 0.0;
};

/// Partition of the vertex set into clusters. Labels are small integers
/// forming a contiguous range starting at 0.
class Clustering {
 public:
  /// Labels must already be contiguous starting at 0.
  explicit Clustering(std::vector<int> labels);

  /// Renumbers arbitrary labels by first appearance.
  static Clustering from_labels(const std::vector<int>& raw);
  static Clustering single_cluster(int n);
  static Clustering singletons(int n);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int cluster_count() const { return cluster_count_; }
  int label(int u) const { return labels_[u]; }
  const std::vector<int>& labels() const { return labels_; }
  bool same_cluster(int u, int v) const { return labels_[u] == labels_[v]; }

 private:
  std::vector<int> labels_;
  int cluster_count_ = 0;
};

/// Per-vertex total weight of misclassified incident edges: cut + edges
/// plus uncut - edges.
std::vector<double> disagreement_vector(const SignedGraph& graph,
                                        const Clustering& clustering);

/// Per-vertex total weight of correctly classified incident edges.
/// Satisfies agree(u) + disagree(u) = c(u) for every vertex.
std::vector<double> agreement_vector(const SignedGraph& graph,
                                     const Clustering& clustering);

/// c(u): total weight of edges incident on u.
std::vector<double> total_incident_weight(const SignedGraph& graph);

/// Aggregator applied to a per-vertex value vector. max and sum are the
/// minimization objectives, min and sum the maximization ones.
enum class Aggregate : std::uint8_t { max, sum, min };

double evaluate_objective(Aggregate kind, std::span<const double> values);

enum class Side : std::uint8_t { left, right };

struct BipartiteSides {
  std::vector<Side> side;

  bool is_left(int u) const { return side[u] == Side::left; }
};

/// Two-colors the graph; smallest vertex of each connected component goes
/// left. Throws contract_error if some edge cannot cross sides.
BipartiteSides infer_bipartite_sides(const SignedGraph& graph);

/// Checks that every edge crosses sides.
void validate_bipartite(const SignedGraph& graph, const BipartiteSides& sides);

}  // namespace lgc
