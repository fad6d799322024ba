#pragma once

#include <iosfwd>
#include <string>

#include "lgc/graph.hpp"
#include "lgc/reductions.hpp"

namespace lgc {

/// Graph text format: lines starting with '#' are comments; the first data
/// line is "n m", followed by m lines "u v w s" with 0-based vertex ids,
/// a decimal weight and s in {+,-}.
SignedGraph read_graph(std::istream& in);
void write_graph(const SignedGraph& graph, std::ostream& out);

/// Clustering format: n lines "u k" (vertex id, cluster id). Arbitrary
/// labels are renumbered on read.
Clustering read_clustering(std::istream& in, int vertex_count);
void write_clustering(const Clustering& clustering, std::ostream& out);

/// Cut problem format: a header line "st s t", "multiway k t1 ... tk" or
/// "multicut k s1 t1 ... sk tk" followed by a graph section whose edges are
/// all +. The sign column of edge lines may be omitted.
CutProblem read_cut_problem(std::istream& in);

SignedGraph read_graph_file(const std::string& path);
Clustering read_clustering_file(const std::string& path, int vertex_count);
CutProblem read_cut_problem_file(const std::string& path);

}  // namespace lgc
