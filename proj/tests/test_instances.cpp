#include <doctest.h>

#include <sstream>

#include "lgc/errors.hpp"
#include "lgc/instances.hpp"
#include "lgc/io.hpp"

using namespace lgc;

TEST_CASE("splitmix64 matches the reference stream") {
  SplitMix64 a(42);
  CHECK(a.next() == 0xbdd732262feb6e95ULL);
  CHECK(a.next() == 0x28efe333b266f103ULL);
  CHECK(a.next() == 0x47526757130f9f52ULL);
  SplitMix64 b(0);
  CHECK(b.next() == 0xe220a8397b1dcdafULL);
  CHECK(b.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("gap cycle structure") {
  SignedGraph g3 = gap_cycle(3);
  int plus = 0, minus = 0;
  for (const SignedEdge& e : g3.edges())
    (e.sign == Sign::plus ? plus : minus)++;
  CHECK(plus == 2);
  CHECK(minus == 1);

  SignedGraph g = gap_cycle(10);
  CHECK(g.edge_count() == 10);
  for (int i = 0; i < 9; ++i) {
    CHECK(g.edge(i).u == i);
    CHECK(g.edge(i).v == i + 1);
    CHECK(g.edge(i).sign == Sign::plus);
    CHECK(g.edge(i).weight == 1.0);
  }
  CHECK(g.edge(9).u == 9);
  CHECK(g.edge(9).v == 0);
  CHECK(g.edge(9).sign == Sign::minus);

  CHECK_THROWS_AS(gap_cycle(2), contract_error);
}

TEST_CASE("random instances are pure in (parameters, seed)") {
  SignedGraph a = random_signed(8, 0.6, 4, 123);
  SignedGraph b = random_signed(8, 0.6, 4, 123);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int i = 0; i < a.edge_count(); ++i) {
    CHECK(a.edge(i).u == b.edge(i).u);
    CHECK(a.edge(i).v == b.edge(i).v);
    CHECK(a.edge(i).weight == b.edge(i).weight);
    CHECK(a.edge(i).sign == b.edge(i).sign);
  }

  std::ostringstream s1, s2;
  write_graph(a, s1);
  write_graph(b, s2);
  CHECK(s1.str() == s2.str());  // byte identical
}

TEST_CASE("sign bias and weight range") {
  SignedGraph all_plus = random_signed(8, 1.0, 3, 7);
  for (const SignedEdge& e : all_plus.edges()) {
    CHECK(e.sign == Sign::plus);
    CHECK(e.weight >= 1.0);
    CHECK(e.weight <= 3.0);
    CHECK(e.weight == static_cast<int>(e.weight));
  }

  // histogram smoke test: fraction of + edges tracks the bias
  long total = 0, plus = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    SignedGraph g = random_signed(8, 0.7, 2, seed);
    for (const SignedEdge& e : g.edges()) {
      ++total;
      if (e.sign == Sign::plus) ++plus;
    }
  }
  double fraction = static_cast<double>(plus) / total;
  CHECK(fraction > 0.65);
  CHECK(fraction < 0.75);

  CHECK_THROWS_AS(random_signed(5, 1.5, 3, 1), contract_error);
  CHECK_THROWS_AS(random_signed(5, 0.5, 0, 1), contract_error);
}

TEST_CASE("complete and bipartite generators") {
  SignedGraph k4 = complete_random(4, 3);
  CHECK(k4.edge_count() == 6);
  for (const SignedEdge& e : k4.edges()) CHECK(e.weight == 1.0);

  auto inst = complete_bipartite_random(2, 3, 3);
  CHECK(inst.graph.edge_count() == 6);
  validate_bipartite(inst.graph, inst.sides);
  CHECK(inst.sides.is_left(0));
  CHECK(inst.sides.is_left(1));
  CHECK(!inst.sides.is_left(2));
}
