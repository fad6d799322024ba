#include <doctest.h>

#include <sstream>

#include "lgc/errors.hpp"
#include "lgc/instances.hpp"
#include "lgc/io.hpp"

using namespace lgc;

TEST_CASE("graph text round trip") {
  SignedGraph g = random_signed(7, 0.5, 5, 11);
  std::ostringstream out;
  write_graph(g, out);
  std::istringstream in(out.str());
  SignedGraph back = read_graph(in);
  REQUIRE(back.vertex_count() == g.vertex_count());
  REQUIRE(back.edge_count() == g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    CHECK(back.edge(i).u == g.edge(i).u);
    CHECK(back.edge(i).v == g.edge(i).v);
    CHECK(back.edge(i).weight == g.edge(i).weight);
    CHECK(back.edge(i).sign == g.edge(i).sign);
  }
}

TEST_CASE("graph parser accepts comments and rejects junk") {
  std::istringstream ok("# a comment\n\n3 2\n0 1 1.5 +\n# between edges\n1 2 2 -\n");
  SignedGraph g = read_graph(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge(1).sign == Sign::minus);

  std::istringstream bad_header("3\n");
  CHECK_THROWS_AS(read_graph(bad_header), parse_error);
  std::istringstream missing_edges("3 2\n0 1 1 +\n");
  CHECK_THROWS_AS(read_graph(missing_edges), parse_error);
  std::istringstream bad_sign("2 1\n0 1 1 *\n");
  CHECK_THROWS_AS(read_graph(bad_sign), parse_error);
  std::istringstream dup("2 2\n0 1 1 +\n1 0 1 -\n");
  CHECK_THROWS_AS(read_graph(dup), parse_error);
  std::istringstream self_loop("2 1\n1 1 1 +\n");
  CHECK_THROWS_AS(read_graph(self_loop), parse_error);
}

TEST_CASE("clustering text round trip") {
  Clustering c = Clustering::from_labels({0, 1, 1, 0, 2});
  std::ostringstream out;
  write_clustering(c, out);
  std::istringstream in(out.str());
  Clustering back = read_clustering(in, 5);
  CHECK(back.labels() == c.labels());

  std::istringstream missing("0 0\n1 0\n");
  CHECK_THROWS_AS(read_clustering(missing, 3), parse_error);
  std::istringstream twice("0 0\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_clustering(twice, 2), parse_error);
  // arbitrary labels are renumbered
  std::istringstream weird("1 9\n0 4\n");
  Clustering renum = read_clustering(weird, 2);
  CHECK(renum.cluster_count() == 2);
}

TEST_CASE("cut problem parsing") {
  std::istringstream st("st 0 2\n3 2\n0 1 1\n1 2 1\n");
  CutProblem p = read_cut_problem(st);
  CHECK(p.kind() == CutKind::st);
  CHECK(p.source() == 0);
  CHECK(p.sink() == 2);
  CHECK(p.base().edge_count() == 2);

  std::istringstream mw("# comment\nmultiway 3 0 1 2\n4 3\n0 3 1 +\n1 3 1 +\n2 3 2 +\n");
  CutProblem q = read_cut_problem(mw);
  CHECK(q.kind() == CutKind::multiway);
  CHECK(q.terminals() == std::vector<int>{0, 1, 2});

  std::istringstream mc("multicut 2 0 1 2 3\n4 2\n0 2 1\n1 3 1\n");
  CutProblem r = read_cut_problem(mc);
  CHECK(r.kind() == CutKind::multicut);
  CHECK(r.pairs().size() == 2);

  std::istringstream minus_edge("st 0 1\n2 1\n0 1 1 -\n");
  CHECK_THROWS_AS(read_cut_problem(minus_edge), parse_error);
  std::istringstream same_st("st 1 1\n2 1\n0 1 1\n");
  CHECK_THROWS_AS(read_cut_problem(same_st), parse_error);
  std::istringstream bad_kind("mincut 0 1\n2 0\n");
  CHECK_THROWS_AS(read_cut_problem(bad_kind), parse_error);
}
