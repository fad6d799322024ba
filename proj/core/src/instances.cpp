#include "lgc/instances.hpp"

#include "lgc/errors.hpp"

namespace lgc {

SignedGraph gap_cycle(int n) {
  if (n < 3) throw contract_error("gap cycle needs n >= 3");
  std::vector<SignedEdge> edges;
  edges.reserve(n);
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1, 1.0, Sign::plus});
  edges.push_back({n - 1, 0, 1.0, Sign::minus});
  return SignedGraph(n, std::move(edges));
}

SignedGraph random_signed(int n, double plus_probability,
                          int max_integer_weight, std::uint64_t seed) {
  if (n < 1) throw contract_error("random_signed needs n >= 1");
  if (!(plus_probability >= 0.0 && plus_probability <= 1.0))
    throw contract_error("plus_probability must be in [0, 1]");
  if (max_integer_weight < 1)
    throw contract_error("max_integer_weight must be >= 1");
  SplitMix64 rng(seed);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() >= 0.5) continue;
      double weight = 1.0 + static_cast<double>(rng.next_below(
                                static_cast<std::uint64_t>(max_integer_weight)));
      Sign sign = rng.next_unit() < plus_probability ? Sign::plus : Sign::minus;
      edges.push_back({u, v, weight, sign});
    }
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph complete_random(int n, std::uint64_t seed) {
  if (n < 1) throw contract_error("complete_random needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back(
          {u, v, 1.0, rng.next_unit() < 0.5 ? Sign::plus : Sign::minus});
  return SignedGraph(n, std::move(edges));
}

BipartiteInstance complete_bipartite_random(int n1, int n2,
                                            std::uint64_t seed) {
  if (n1 < 1 || n2 < 1)
    throw contract_error("bipartite instance needs both sides nonempty");
  SplitMix64 rng(seed);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * n2);
  for (int u = 0; u < n1; ++u)
    for (int v = n1; v < n1 + n2; ++v)
      edges.push_back(
          {u, v, 1.0, rng.next_unit() < 0.5 ? Sign::plus : Sign::minus});
  BipartiteSides sides;
  sides.side.assign(n1 + n2, Side::right);
  for (int u = 0; u < n1; ++u) sides.side[u] = Side::left;
  return {SignedGraph(n1 + n2, std::move(edges)), std::move(sides)};
}

}  // namespace lgc
