#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lgc/agreements.hpp"
#include "lgc/ballround.hpp"
#include "lgc/errors.hpp"
#include "lgc/instances.hpp"
#include "lgc/io.hpp"
#include "lgc/minmax.hpp"
#include "lgc/oracle.hpp"
#include "lgc/reductions.hpp"
#include "lgc/relaxation.hpp"

namespace {

using namespace lgc;

// exit codes: 0 ok, 2 parse failure, 3 violated precondition, 4 internal bug
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join_vector(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

void print_instance_summary(const std::string& path, const SignedGraph& g) {
  double plus = 0.0, minus = 0.0;
  for (const SignedEdge& e : g.edges())
    (e.sign == Sign::plus ? plus : minus) += e.weight;
  std::cout << "instance=" << path << '\n'
            << "n=" << g.vertex_count() << '\n'
            << "m=" << g.edge_count() << '\n'
            << "total_weight=" << format_number(plus + minus) << '\n'
            << "plus_weight=" << format_number(plus) << '\n'
            << "minus_weight=" << format_number(minus) << '\n';
}

void write_clustering_file(const Clustering& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  write_clustering(c, out);
}

void maybe_export_lp(const LinearProgram& lp, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  write_lp(lp, out);
}

double one_sided_oracle(const SignedGraph& g, const BipartiteSides& sides,
                        Aggregate objective) {
  if (g.vertex_count() > 12)
    throw contract_error("oracle refuses n > 12 (Bell-number guard)");
  std::vector<int> left;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (sides.is_left(u)) left.push_back(u);
  PartitionIterator it(g.vertex_count());
  double best = -1.0;
  do {
    Clustering c(it.labels());
    auto disagree = disagreement_vector(g, c);
    std::vector<double> measured;
    for (int u : left) measured.push_back(disagree[u]);
    double value = evaluate_objective(objective, measured);
    if (best < 0.0 || value < best) best = value;
  } while (it.next());
  return best;
}

struct SolveOptions {
  std::string algorithm;
  std::string input;
  std::string out;
  std::string objective = "max";
  std::string export_lp;
  double eps = 0.5;
  int jobs = 1;
  bool oracle = false;
  bool trace = false;
};

int run_solve(const SolveOptions& opt) {
  SignedGraph g = read_graph_file(opt.input);
  Aggregate objective =
      opt.objective == "sum" ? Aggregate::sum : Aggregate::max;
  std::string out_path = opt.out.empty() ? opt.input + ".clusters" : opt.out;

  auto started = std::chrono::steady_clock::now();
  std::cout << "algorithm=" << opt.algorithm << '\n';
  print_instance_summary(opt.input, g);

  Clustering clustering = Clustering::single_cluster(g.vertex_count());
  double value = 0.0;

  if (opt.algorithm == "minmax-general") {
    LinearProgram lp = build_disagreement_lp(g, Aggregate::max);
    maybe_export_lp(lp, opt.export_lp);
    LpSolution bound = solve_lp(lp);
    if (bound.status != SolveStatus::optimal)
      throw internal_error("unpinned relaxation must solve");
    MinMaxResult r = solve_minmax(g, opt.jobs);
    clustering = r.clustering;
    value = r.value;
    std::cout << "lp_bound=" << format_number(bound.objective) << '\n'
              << "best_cmax=" << format_number(r.best_c_max) << '\n';
  } else if (opt.algorithm == "local-complete") {
    LinearProgram lp = build_disagreement_lp(g, objective);
    maybe_export_lp(lp, opt.export_lp);
    LpSolution solution = solve_lp(lp);
    if (solution.status != SolveStatus::optimal)
      throw internal_error("unpinned relaxation must solve");
    MetricSolution metric = extract_metric(g, lp, solution);
    clustering = greedy_clustering_complete(metric);
    value = evaluate_objective(objective, disagreement_vector(g, clustering));
    std::cout << "lp_bound=" << format_number(solution.objective) << '\n'
              << "seven_bound=" << format_number(7.0 * solution.objective)
              << '\n';
  } else if (opt.algorithm == "local-bipartite") {
    BipartiteSides sides = infer_bipartite_sides(g);
    std::vector<int> left;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (sides.is_left(u)) left.push_back(u);
    LinearProgram lp = build_disagreement_lp(g, objective, {}, left);
    maybe_export_lp(lp, opt.export_lp);
    LpSolution solution = solve_lp(lp);
    if (solution.status != SolveStatus::optimal)
      throw internal_error("unpinned relaxation must solve");
    MetricSolution metric = extract_metric(g, lp, solution);
    clustering = greedy_clustering_bipartite(metric, sides);
    auto disagree = disagreement_vector(g, clustering);
    std::vector<double> measured;
    for (int u : left) measured.push_back(disagree[u]);
    value = evaluate_objective(objective, measured);
    std::cout << "left_size=" << left.size() << '\n'
              << "lp_bound=" << format_number(solution.objective) << '\n'
              << "seven_bound=" << format_number(7.0 * solution.objective)
              << '\n';
    if (opt.oracle)
      std::cout << "oracle="
                << format_number(one_sided_oracle(g, sides, objective)) << '\n';
  } else if (opt.algorithm == "maxmin-agree") {
    MaxMinResult r = solve_maxmin_agreements(g, opt.eps);
    clustering = r.clustering;
    value = r.value;
    if (opt.trace)
      for (const FlipRecord& flip : r.search.trace)
        std::cout << flip.iteration << ' ' << flip.vertex << ' '
                  << format_number(flip.potential) << '\n';
    std::cout << "eps=" << format_number(opt.eps) << '\n'
              << "eps_internal=" << format_number(r.epsilon_internal) << '\n'
              << "c_star=" << format_number(r.c_star) << '\n'
              << "certificate=" << format_number(r.certificate) << '\n'
              << "iterations=" << r.search.iterations << '\n';
    if (opt.oracle)
      std::cout << "oracle="
                << format_number(exact_max_min_agreements(g).value) << '\n';
  } else {
    throw contract_error("unknown algorithm '" + opt.algorithm + "'");
  }

  if (opt.oracle &&
      (opt.algorithm == "minmax-general" || opt.algorithm == "local-complete")) {
    std::cout << "oracle="
              << format_number(
                     exact_min_local_disagreements(
                         g, opt.algorithm == "minmax-general" ? Aggregate::max
                                                              : objective)
                         .value)
              << '\n';
  }

  auto finished = std::chrono::steady_clock::now();
  write_clustering_file(clustering, out_path);
  std::cout << "value=" << format_number(value) << '\n'
            << "clusters=" << clustering.cluster_count() << '\n'
            << "disagree=" << join_vector(disagreement_vector(g, clustering))
            << '\n'
            << "agree=" << join_vector(agreement_vector(g, clustering)) << '\n'
            << "wall_ms="
            << format_number(
                   std::chrono::duration<double, std::milli>(finished - started)
                       .count())
            << '\n'
            << "out=" << out_path << '\n';
  return 0;
}

int run_oracle(const std::string& kind, const std::string& input,
               const std::string& objective, const std::string& out) {
  auto started = std::chrono::steady_clock::now();
  double value = 0.0;
  Clustering clustering = Clustering::single_cluster(1);
  if (kind == "min-disagree") {
    SignedGraph g = read_graph_file(input);
    OracleResult r = exact_min_local_disagreements(
        g, objective == "sum" ? Aggregate::sum : Aggregate::max);
    value = r.value;
    clustering = r.clustering;
  } else if (kind == "max-agree") {
    SignedGraph g = read_graph_file(input);
    OracleResult r = exact_max_min_agreements(g);
    value = r.value;
    clustering = r.clustering;
  } else if (kind == "minmax-cut") {
    CutProblem p = read_cut_problem_file(input);
    OracleResult r = exact_minmax_cut(p);
    value = r.value;
    clustering = r.clustering;
  } else {
    throw contract_error("unknown oracle kind '" + kind + "'");
  }
  auto finished = std::chrono::steady_clock::now();
  std::cout << "kind=" << kind << '\n'
            << "value=" << format_number(value) << '\n'
            << "clusters=" << clustering.cluster_count() << '\n'
            << "wall_ms="
            << format_number(
                   std::chrono::duration<double, std::milli>(finished - started)
                       .count())
            << '\n';
  if (!out.empty()) {
    write_clustering_file(clustering, out);
    std::cout << "out=" << out << '\n';
  }
  return 0;
}

void emit_graph(const SignedGraph& g, const std::string& out) {
  if (out.empty()) {
    write_graph(g, std::cout);
  } else {
    std::ofstream f(out);
    if (!f) throw parse_error("cannot write '" + out + "'");
    write_graph(g, f);
  }
}

int run_gapdemo(int n_min, int n_max) {
  if (n_min < 3 || n_max < n_min)
    throw contract_error("gapdemo needs 3 <= n-min <= n-max");
  if (n_max > 12)
    throw contract_error("gapdemo is capped at n = 12 by the oracle guard");
  for (int n = n_min; n <= n_max; ++n) {
    SignedGraph g = gap_cycle(n);
    LpSolution disagree = solve_lp(build_disagreement_lp(g, Aggregate::max));
    LpSolution agree = solve_lp(build_agreements_lp(g));
    if (disagree.status != SolveStatus::optimal ||
        agree.status != SolveStatus::optimal)
      throw internal_error("gap relaxations must solve");
    double int_disagree =
        exact_min_local_disagreements(g, Aggregate::max).value;
    double int_agree = exact_max_min_agreements(g).value;
    std::printf("n=%d disagree: lp=%.6g int=%.6g ratio=%.6g\n", n,
                disagree.objective, int_disagree,
                int_disagree / disagree.objective);
    std::printf("n=%d agree: lp=%.6g int=%.6g ratio=%.6g\n", n,
                agree.objective, int_agree, int_agree / agree.objective);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"correlation clustering with per-vertex guarantees"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "run a clustering algorithm on a signed graph file");
  solve->add_option("algorithm", solve_opt.algorithm,
                    "minmax-general | local-complete | local-bipartite | "
                    "maxmin-agree")
      ->required();
  solve->add_option("graph", solve_opt.input, "signed graph file")->required();
  solve->add_option("--objective", solve_opt.objective, "max | sum")
      ->check(CLI::IsMember({"max", "sum"}));
  solve->add_option("--eps", solve_opt.eps,
                    "approximation slack for maxmin-agree");
  solve->add_option("--out", solve_opt.out, "clustering output path");
  solve->add_option("--jobs", solve_opt.jobs,
                    "parallel c_max guesses for minmax-general");
  solve->add_option("--export-lp", solve_opt.export_lp,
                    "write the relaxation in LP text format");
  solve->add_flag("--oracle", solve_opt.oracle,
                  "also compute the exact optimum (small n only)");
  solve->add_flag("--trace", solve_opt.trace,
                  "print one 'iter u phi' line per local search flip");

  std::string oracle_kind, oracle_input, oracle_out;
  std::string oracle_objective = "max";
  CLI::App* oracle = app.add_subcommand("oracle", "exact brute-force solvers");
  oracle->add_option("kind", oracle_kind,
                     "min-disagree | max-agree | minmax-cut")
      ->required();
  oracle->add_option("file", oracle_input, "graph or cut problem file")
      ->required();
  oracle->add_option("--objective", oracle_objective, "max | sum")
      ->check(CLI::IsMember({"max", "sum"}));
  oracle->add_option("--out", oracle_out, "clustering output path");

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int gap_n = 10;
  std::string gen_out;
  CLI::App* gen_gap =
      gen->add_subcommand("gap-cycle", "all-plus cycle with one minus edge");
  gen_gap->add_option("n", gap_n, "number of vertices")->required();
  gen_gap->add_option("--out", gen_out, "output path (default stdout)");

  int rnd_n = 8, rnd_max_weight = 4;
  double rnd_plus = 0.5;
  std::uint64_t rnd_seed = 1;
  CLI::App* gen_rnd = gen->add_subcommand("random", "random signed graph");
  gen_rnd->add_option("--n", rnd_n, "vertices")->required();
  gen_rnd->add_option("--plus-prob", rnd_plus, "probability of a + label");
  gen_rnd->add_option("--max-weight", rnd_max_weight,
                      "integer weights in [1, max]");
  gen_rnd->add_option("--seed", rnd_seed, "splitmix64 seed");
  gen_rnd->add_option("--out", gen_out, "output path (default stdout)");

  int comp_n = 6;
  std::uint64_t comp_seed = 1;
  CLI::App* gen_comp =
      gen->add_subcommand("complete", "complete graph, random signs");
  gen_comp->add_option("--n", comp_n, "vertices")->required();
  gen_comp->add_option("--seed", comp_seed, "splitmix64 seed");
  gen_comp->add_option("--out", gen_out, "output path (default stdout)");

  int bip_n1 = 3, bip_n2 = 3;
  std::uint64_t bip_seed = 1;
  CLI::App* gen_bip = gen->add_subcommand(
      "bipartite", "complete bipartite graph, random signs");
  gen_bip->add_option("--n1", bip_n1, "left side size")->required();
  gen_bip->add_option("--n2", bip_n2, "right side size")->required();
  gen_bip->add_option("--seed", bip_seed, "splitmix64 seed");
  gen_bip->add_option("--out", gen_out, "output path (default stdout)");

  std::string convert_input, convert_out;
  CLI::App* convert = app.add_subcommand(
      "convert", "encode a min-max cut problem as a signed graph");
  convert->add_option("file", convert_input, "cut problem file")->required();
  convert->add_option("--out", convert_out, "output path (default stdout)");

  int demo_n = 0, demo_min = 4, demo_max = 12;
  CLI::App* gapdemo = app.add_subcommand(
      "gapdemo", "LP vs integral values on the gap cycle family");
  gapdemo->add_option("--n", demo_n, "single cycle size");
  gapdemo->add_option("--n-min", demo_min, "range start");
  gapdemo->add_option("--n-max", demo_max, "range end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opt);
    if (oracle->parsed())
      return run_oracle(oracle_kind, oracle_input, oracle_objective,
                        oracle_out);
    if (gen->parsed()) {
      if (gen_gap->parsed()) emit_graph(gap_cycle(gap_n), gen_out);
      if (gen_rnd->parsed())
        emit_graph(random_signed(rnd_n, rnd_plus, rnd_max_weight, rnd_seed),
                   gen_out);
      if (gen_comp->parsed())
        emit_graph(complete_random(comp_n, comp_seed), gen_out);
      if (gen_bip->parsed())
        emit_graph(complete_bipartite_random(bip_n1, bip_n2, bip_seed).graph,
                   gen_out);
      return 0;
    }
    if (convert->parsed()) {
      EncodedInstance enc = encode(read_cut_problem_file(convert_input));
      emit_graph(enc.graph, convert_out);
      return 0;
    }
    if (gapdemo->parsed()) {
      if (demo_n > 0) return run_gapdemo(demo_n, demo_n);
      return run_gapdemo(demo_min, demo_max);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
} catch (...) {
  std::fputs("internal error\n", stderr);
  return kExitInternal;
}
