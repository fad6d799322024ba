#include "lgc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lgc/errors.hpp"

namespace lgc {

namespace {

// Next non-comment, non-blank line; false at end of stream.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected integer ") + what + ", got '" +
                      tok + "'");
  }
}

double to_double(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    double value = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected number ") + what + ", got '" +
                      tok + "'");
  }
}

SignedEdge parse_edge(const std::vector<std::string>& toks, bool sign_required) {
  SignedEdge e;
  e.u = to_int(toks[0], "vertex");
  e.v = to_int(toks[1], "vertex");
  e.weight = to_double(toks[2], "weight");
  if (toks.size() == 4) {
    if (toks[3] == "+")
      e.sign = Sign::plus;
    else if (toks[3] == "-")
      e.sign = Sign::minus;
    else
      throw parse_error("edge sign must be + or -, got '" + toks[3] + "'");
  } else if (sign_required) {
    throw parse_error("edge line needs 4 fields: u v w s");
  }
  return e;
}

SignedGraph read_graph_body(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw parse_error("missing 'n m' header line");
  auto head = tokens(line);
  if (head.size() != 2) throw parse_error("header line must be 'n m'");
  int n = to_int(head[0], "vertex count");
  int m = to_int(head[1], "edge count");
  if (n < 1) throw parse_error("vertex count must be positive");
  if (m < 0) throw parse_error("edge count must be nonnegative");
  std::vector<SignedEdge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw parse_error("expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    auto toks = tokens(line);
    if (toks.size() != 3 && toks.size() != 4)
      throw parse_error("bad edge line: '" + line + "'");
    edges.push_back(parse_edge(toks, /*sign_required=*/true));
  }
  try {
    return SignedGraph(n, std::move(edges));
  } catch (const contract_error& e) {
    throw parse_error(std::string("invalid graph: ") + e.what());
  }
}

}  // namespace

SignedGraph read_graph(std::istream& in) { return read_graph_body(in); }

void write_graph(const SignedGraph& graph, std::ostream& out) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  char buf[64];
  for (const SignedEdge& e : graph.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
    out << e.u << ' ' << e.v << ' ' << buf << ' '
        << (e.sign == Sign::plus ? '+' : '-') << '\n';
  }
}

Clustering read_clustering(std::istream& in, int vertex_count) {
  std::vector<int> labels(vertex_count, -1);
  std::string line;
  int seen = 0;
  while (next_data_line(in, line)) {
    auto toks = tokens(line);
    if (toks.size() != 2)
      throw parse_error("clustering line must be 'u k': '" + line + "'");
    int u = to_int(toks[0], "vertex");
    int k = to_int(toks[1], "cluster");
    if (u < 0 || u >= vertex_count)
      throw parse_error("clustering vertex out of range: " + std::to_string(u));
    if (labels[u] != -1)
      throw parse_error("vertex assigned twice: " + std::to_string(u));
    if (k < 0) throw parse_error("cluster id must be nonnegative");
    labels[u] = k;
    ++seen;
  }
  if (seen != vertex_count)
    throw parse_error("clustering misses " +
                      std::to_string(vertex_count - seen) + " vertices");
  return Clustering::from_labels(labels);
}

void write_clustering(const Clustering& clustering, std::ostream& out) {
  for (int u = 0; u < clustering.vertex_count(); ++u)
    out << u << ' ' << clustering.label(u) << '\n';
}

CutProblem read_cut_problem(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw parse_error("missing cut problem header");
  auto head = tokens(line);
  if (head.empty()) throw parse_error("empty cut problem header");

  // The graph section follows the header; edges may omit the sign column.
  auto read_base = [&in]() {
    std::string body_line;
    if (!next_data_line(in, body_line))
      throw parse_error("missing 'n m' header line");
    auto toks = tokens(body_line);
    if (toks.size() != 2) throw parse_error("header line must be 'n m'");
    int n = to_int(toks[0], "vertex count");
    int m = to_int(toks[1], "edge count");
    if (n < 1) throw parse_error("vertex count must be positive");
    std::vector<SignedEdge> edges;
    for (int i = 0; i < m; ++i) {
      if (!next_data_line(in, body_line)) throw parse_error("missing edges");
      auto etoks = tokens(body_line);
      if (etoks.size() != 3 && etoks.size() != 4)
        throw parse_error("bad edge line: '" + body_line + "'");
      SignedEdge e = parse_edge(etoks, /*sign_required=*/false);
      if (e.sign != Sign::plus)
        throw parse_error("cut problem edges must be unsigned (+)");
      edges.push_back(e);
    }
    try {
      return SignedGraph(n, std::move(edges));
    } catch (const contract_error& e) {
      throw parse_error(std::string("invalid graph: ") + e.what());
    }
  };

  try {
    if (head[0] == "st") {
      if (head.size() != 3) throw parse_error("header must be 'st s t'");
      int s = to_int(head[1], "s");
      int t = to_int(head[2], "t");
      return CutProblem::st_cut(read_base(), s, t);
    }
    if (head[0] == "multiway") {
      if (head.size() < 2) throw parse_error("header must be 'multiway k t...'");
      int k = to_int(head[1], "terminal count");
      if (static_cast<int>(head.size()) != 2 + k)
        throw parse_error("multiway header lists " +
                          std::to_string(head.size() - 2) + " terminals, not " +
                          std::to_string(k));
      std::vector<int> terminals;
      for (int i = 0; i < k; ++i)
        terminals.push_back(to_int(head[2 + i], "terminal"));
      return CutProblem::multiway(read_base(), std::move(terminals));
    }
    if (head[0] == "multicut") {
      if (head.size() < 2)
        throw parse_error("header must be 'multicut k s1 t1 ...'");
      int k = to_int(head[1], "pair count");
      if (static_cast<int>(head.size()) != 2 + 2 * k)
        throw parse_error("multicut header needs " + std::to_string(2 * k) +
                          " pair vertices");
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < k; ++i)
        pairs.emplace_back(to_int(head[2 + 2 * i], "pair vertex"),
                           to_int(head[3 + 2 * i], "pair vertex"));
      return CutProblem::multicut(read_base(), std::move(pairs));
    }
  } catch (const contract_error& e) {
    throw parse_error(std::string("invalid cut problem: ") + e.what());
  }
  throw parse_error("unknown cut problem kind '" + head[0] + "'");
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

SignedGraph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

Clustering read_clustering_file(const std::string& path, int vertex_count) {
  auto in = open_or_throw(path);
  return read_clustering(in, vertex_count);
}

CutProblem read_cut_problem_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_cut_problem(in);
}

}  // namespace lgc
