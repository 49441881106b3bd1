#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wmlq/bench.hpp"
#include "wmlq/generators.hpp"
#include "wmlq/io.hpp"
#include "wmlq/special.hpp"
#include "wmlq/twdp.hpp"

namespace wmlq {

namespace {

const std::map<std::string, Algorithm> kAlgorithms = {
    {"auto", Algorithm::kAuto},        {"greedy", Algorithm::kGreedy},
    {"twdp", Algorithm::kTreeDp},      {"degree2", Algorithm::kDegree2},
    {"u2", Algorithm::kU2},            {"all-open", Algorithm::kAllOpen},
    {"oracle", Algorithm::kOracle},
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// The library default edge cap is tuned for the 2^|E| cross-check sweep;
// on the command line only the 2^|P| enumeration matters, so allow more
// edges while keeping the post cap.
constexpr OracleLimits kCliOracleLimits{12, 4096, 20};

int run_solve(const std::string& input, const std::string& algo,
              unsigned long long budget, const std::string& out_path) {
  const Instance inst = parse_instance(read_file(input));
  SolveOptions options;
  options.algorithm = kAlgorithms.at(algo);
  options.cell_budget = budget;
  options.oracle_limits = kCliOracleLimits;
  const auto result = solve(inst, options);
  if (!result) {
    std::cout << "infeasible\n";
    return 2;
  }
  std::cout << "objective " << result->objective << "\n"
            << "algorithm " << result->algorithm << "\n"
            << "exact " << (result->exact ? "yes" : "no") << "\n";
  if (result->guarantee_factor)
    std::cout << "guarantee-factor " << *result->guarantee_factor << "\n";
  if (result->dp_cells) std::cout << "cells " << *result->dp_cells << "\n";
  std::cout << "elapsed-ms " << result->elapsed_ms << "\n";
  const std::string text =
      render_solution({result->objective, result->assignment});
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int run_verify(const std::string& instance_path,
               const std::string& solution_path) {
  const Instance inst = parse_instance(read_file(instance_path));
  const Solution sol = parse_solution(read_file(solution_path));
  const EvaluateResult eval = evaluate(inst, sol.pairs);
  if (!eval.feasible) {
    std::cout << "violation: " << eval.violation << "\n";
    return 1;
  }
  if (eval.weight != sol.objective) {
    std::cout << "violation: objective declares " << sol.objective
              << " but the assignment weighs " << eval.weight << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

// Instances a bench invocation should run: explicit files as given,
// directories expanded to their *.wmlq files in name order.
std::vector<std::pair<std::string, Instance>> collect_instances(
    const std::vector<std::string>& inputs) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(input))
        if (entry.is_regular_file() && entry.path().extension() == ".wmlq")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }
  std::vector<std::pair<std::string, Instance>> instances;
  for (const auto& file : files)
    instances.emplace_back(fs::path(file).stem().string(),
                           parse_instance(read_file(file)));
  return instances;
}

int run_bench(const std::vector<std::string>& inputs,
              const std::vector<std::string>& algos,
              const std::vector<long long>& sweep, unsigned long long budget,
              int jobs, const std::string& csv_path) {
  BenchSpec spec;
  spec.instances = collect_instances(inputs);
  if (!sweep.empty()) {
    // Fixed complete-bipartite shape, upper quota swept over a range: the
    // cells column then tracks the predicted (u+1)^(width+1) growth.
    for (long long u = sweep[0]; u <= sweep[1]; ++u) {
      RandomSpec rs;
      rs.seed = 1;
      rs.num_applicants = 6;
      rs.num_posts = 2;
      rs.degree_min = rs.degree_max = 2;
      rs.lower_min = rs.lower_max = 0;
      rs.upper_min = rs.upper_max = u;
      spec.instances.emplace_back("sweep-u" + std::to_string(u),
                                  gen_random(rs));
    }
  }
  for (const auto& name : algos) spec.algorithms.push_back(kAlgorithms.at(name));
  spec.base_options.cell_budget = budget;
  spec.base_options.oracle_limits = kCliOracleLimits;
  spec.jobs = jobs;
  emit(run_bench_csv(spec), csv_path);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"maximum-weight many-to-one matching with quotas"};
  app.require_subcommand(1);

  std::string input, out_path, algo = "auto", csv_path;
  std::string graph_path, instance_path, solution_path;
  unsigned long long budget = SolveOptions{}.cell_budget;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("input", input, "instance file")->required();
  solve_cmd->add_option("--algo", algo, "algorithm branch")
      ->check(CLI::IsMember(
          {"auto", "greedy", "twdp", "degree2", "u2", "all-open", "oracle"}));
  solve_cmd->add_option("--budget", budget, "tree DP cell budget");
  solve_cmd->add_option("--seed", seed,
                        "reserved; every current branch is deterministic");
  solve_cmd->add_option("--out", out_path, "solution file path");

  auto* gen_cmd = app.add_subcommand("generate", "emit a family instance");
  gen_cmd->require_subcommand(1);
  int k = 1;
  long long scale = 2, r = 0;
  OutdegreeOptions od_options;
  RandomSpec rs;
  auto* tight_a = gen_cmd->add_subcommand("tight-a", "greedy lower-bound family");
  tight_a->add_option("--k", k, "quota parameter")->required();
  auto* tight_b = gen_cmd->add_subcommand("tight-b", "greedy upper-bound family");
  tight_b->add_option("--k", k, "posts and applicants")->required();
  tight_b->add_option("--scale", scale, "diagonal edge weight");
  auto* mis = gen_cmd->add_subcommand("mis-cubic", "independent-set reduction");
  mis->add_option("--graph", graph_path, "cubic graph file")->required();
  auto* inapprox =
      gen_cmd->add_subcommand("inapprox", "hardness-of-approximation family");
  inapprox->add_option("--graph", graph_path, "simple graph file")->required();
  auto* outdeg =
      gen_cmd->add_subcommand("outdegree", "bounded-outdegree orientation");
  outdeg->add_option("--graph", graph_path, "weighted graph file")->required();
  outdeg->add_option("--r", r, "outdegree bound")->required();
  outdeg->add_option("--max-applicants", od_options.max_applicants,
                     "size guard");
  auto* random = gen_cmd->add_subcommand("random", "seeded random instance");
  random->add_option("--seed", rs.seed, "RNG seed");
  random->add_option("--applicants", rs.num_applicants, "applicant count")->required();
  random->add_option("--posts", rs.num_posts, "post count")->required();
  random->add_option("--deg-min", rs.degree_min, "per-applicant degree lower bound");
  random->add_option("--deg-max", rs.degree_max, "per-applicant degree upper bound");
  random->add_option("--lower-min", rs.lower_min, "lower quota range start");
  random->add_option("--lower-max", rs.lower_max, "lower quota range end");
  random->add_option("--upper-min", rs.upper_min, "upper quota range start");
  random->add_option("--upper-max", rs.upper_max, "upper quota range end");
  random->add_option("--weight-min", rs.weight_min, "edge weight range start");
  random->add_option("--weight-max", rs.weight_max, "edge weight range end");
  for (auto* family : {tight_a, tight_b, mis, inapprox, outdeg, random})
    family->add_option("--out", out_path, "instance file path");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a solution against an instance");
  verify_cmd->add_option("instance", instance_path, "instance file")->required();
  verify_cmd->add_option("solution", solution_path, "solution file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "CSV report over instances");
  std::vector<std::string> bench_inputs;
  std::vector<std::string> bench_algos{"auto"};
  std::vector<long long> sweep;
  int jobs = 1;
  bench_cmd->add_option("inputs", bench_inputs,
                        "instance files or directories of *.wmlq files");
  bench_cmd->add_option("--algo", bench_algos, "algorithms to run")
      ->check(CLI::IsMember(
          {"auto", "greedy", "twdp", "degree2", "u2", "all-open", "oracle"}));
  bench_cmd
      ->add_option("--sweep-umax", sweep,
                   "lo hi: add a fixed-shape sweep over upper quotas")
      ->expected(2);
  bench_cmd->add_option("--budget", budget, "tree DP cell budget");
  bench_cmd->add_option("--jobs", jobs, "parallel instances")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv_path, "output path, stdout by default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(input, algo, budget, out_path);
    if (verify_cmd->parsed())
      return run_verify(instance_path, solution_path);
    if (bench_cmd->parsed())
      return run_bench(bench_inputs, bench_algos, sweep, budget, jobs,
                       csv_path);

    // generate: rebuild the invocation as a provenance comment so emitted
    // files say where they came from.
    Instance inst;
    std::ostringstream provenance;
    provenance << "c generate";
    if (tight_a->parsed()) {
      inst = gen_tight_a(k);
      provenance << " tight-a --k " << k;
    } else if (tight_b->parsed()) {
      inst = gen_tight_b(k, scale);
      provenance << " tight-b --k " << k << " --scale " << scale;
    } else if (mis->parsed()) {
      inst = gen_mis_cubic(parse_graph(read_file(graph_path)));
      provenance << " mis-cubic --graph " << graph_path;
    } else if (inapprox->parsed()) {
      inst = gen_inapprox(parse_graph(read_file(graph_path)));
      provenance << " inapprox --graph " << graph_path;
    } else if (outdeg->parsed()) {
      inst = gen_outdegree(parse_graph(read_file(graph_path)), r, od_options);
      provenance << " outdegree --graph " << graph_path << " --r " << r;
    } else if (random->parsed()) {
      inst = gen_random(rs);
      provenance << " random --seed " << rs.seed << " --applicants "
                 << rs.num_applicants << " --posts " << rs.num_posts
                 << " --deg-min " << rs.degree_min << " --deg-max "
                 << rs.degree_max << " --lower-min " << rs.lower_min
                 << " --lower-max " << rs.lower_max << " --upper-min "
                 << rs.upper_min << " --upper-max " << rs.upper_max
                 << " --weight-min " << rs.weight_min << " --weight-max "
                 << rs.weight_max;
    }
    emit(provenance.str() + "\n" + render_instance(inst), out_path);
    return 0;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"wmlq"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace wmlq
