#pragma once

#include <cstdint>

#include "lgc/graph.hpp"

namespace lgc {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Fixed algorithm so that
/// seeded instances are reproducible across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound) by modulo reduction (bias is irrelevant at the
  /// bounds used here and keeps the stream definition trivial).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Unweighted n-cycle: + edges (i, i+1) for i < n-1 and one - edge
/// (n-1, 0). The LP gap instance family.
SignedGraph gap_cycle(int n);

/// Erdos-Renyi style instance: every unordered pair is present with
/// probability 1/2; a present edge is + with probability plus_probability
/// and carries a uniform integer weight in [1, max_integer_weight].
SignedGraph random_signed(int n, double plus_probability,
                          int max_integer_weight, std::uint64_t seed);

/// Complete unweighted graph with uniformly random signs.
SignedGraph complete_random(int n, std::uint64_t seed);

struct BipartiteInstance {
  SignedGraph graph;
  BipartiteSides sides;
};

/// Complete unweighted bipartite graph with uniformly random signs.
/// Vertices 0..n1-1 form the left side.
BipartiteInstance complete_bipartite_random(int n1, int n2,
                                            std::uint64_t seed);

}  // namespace lgc
