#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcfl/bench.hpp"
#include "mcfl/errors.hpp"
#include "mcfl/exact_dp.hpp"
#include "mcfl/fptas.hpp"
#include "mcfl/generate.hpp"
#include "mcfl/io.hpp"
#include "mcfl/monge.hpp"
#include "mcfl/oracle.hpp"
#include "mcfl/reductions.hpp"
#include "mcfl/two_class.hpp"

namespace mcfl::cli {
namespace {

using nlohmann::json;

std::string describe(const MongeWitness& w) {
  std::ostringstream os;
  os << "witness h=" << w.h + 1 << " i=" << w.i + 1 << " j=" << w.j + 1 << " k=" << w.k + 1 << " lhs=" << w.lhs
     << " rhs=" << w.rhs;
  return os.str();
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json(path, j);
  }
}

struct SolveArgs {
  std::string input;
  std::string algorithm = "exact";
  std::string epsilon;
  std::string partition;
  std::string output;
  bool verify = false;
};

int solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = read_instance(a.input);
  require_valid(inst);
  const bool approximate = a.algorithm != "exact";
  if (approximate && a.epsilon.empty()) throw InputError("--epsilon is required for " + a.algorithm);
  const Rational eps = approximate ? parse_rational(a.epsilon) : Rational(0);
  if (approximate && eps <= 0) throw InputError("epsilon must be positive");

  json report = {{"algorithm", a.algorithm}, {"instance_digest", instance_digest(inst)}};
  const auto start = std::chrono::steady_clock::now();
  Solution sol;
  if (a.algorithm == "two-class") {
    const ClientPartition partition =
        a.partition.empty() ? partition_by_release(inst) : partition_from_json(read_json(a.partition));
    validate_partition(inst, partition);
    TwoClassResult r = solve_two_class_fptas(inst, partition, eps);
    sol = std::move(r.solution);
    report["B"] = r.bound.bound;
    report["K"] = r.grid.step();
    report["grid_size"] = r.grid.size();
  } else {
    if (auto w = check_monge_full(inst.costs)) throw MongeViolationError("costs are not Monge: " + describe(*w));
    if (a.algorithm == "exact") {
      sol = solve_exact(inst);
    } else {
      FptasResult r = solve_fptas(inst, eps);
      sol = std::move(r.solution);
      report["B"] = r.bound.bound;
      report["K"] = r.grid.step();
      report["grid_size"] = r.grid.size();
    }
  }
  report["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!sol.feasible()) throw InfeasibleError("no feasible solution");

  const std::vector<std::string> problems = check_solution(inst, sol);
  if (!problems.empty()) throw std::logic_error("solution failed re-validation: " + problems.front());

  report["cost"] = sol.total_cost.str();
  if (approximate) report["epsilon"] = to_string(eps);
  if (a.verify) {
    const RationalCost oracle = brute_force_optimum(inst).optimum;
    report["oracle_cost"] = oracle.str();
    if (oracle.is_finite() && oracle.value() != 0) report["ratio"] = to_string(sol.total_cost.value() / oracle.value());
  }
  if (a.output.empty()) {
    report["solution"] = solution_to_json(sol);
  } else {
    write_json(a.output, solution_to_json(sol));
  }
  out << report.dump(2) << '\n';
  return kOk;
}

int check(const std::string& input, const std::string& mode, std::ostream& out) {
  const Instance inst = read_instance(input);
  std::optional<MongeWitness> w;
  if (mode == "full") {
    w = check_monge_full(inst.costs);
  } else if (mode == "adjacent") {
    w = check_monge_adjacent(inst.costs);
  } else {
    w = check_windowed_monge(inst);
  }
  if (w) {
    out << describe(*w) << '\n';
    return kNotMonge;
  }
  out << "pass\n";
  return kOk;
}

int convert(const std::string& from, const std::string& input, const std::string& output, std::ostream& out) {
  Instance inst;
  if (from == "single-demand") {
    const Instance src = read_instance(input);
    if (src.num_clients() != 1) throw InputError("single-demand input must have exactly one client");
    std::vector<Cost> column;
    for (int i = 0; i < src.num_facilities(); ++i) column.push_back(src.costs(i, 0));
    inst = single_demand_to_cfl(src.facilities, src.clients[0], column);
  } else {
    LotSizingInstance ls;
    try {
      ls = lot_sizing_from_json(read_json(input));
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
    inst = from == "lot-sizing" ? lot_sizing_to_cfl(ls) : multi_item_to_cfl(ls);
  }
  if (auto w = check_monge_full(inst.costs)) {
    throw MongeViolationError("internal error: converted costs are not Monge: " + describe(*w));
  }
  emit(instance_to_json(inst), output, out);
  return kOk;
}

int generate(const std::string& kind, const GeneratorOptions& options, const std::string& output,
             std::ostream& out) {
  json j;
  if (kind == "lot-sizing") {
    j = lot_sizing_to_json(random_lot_sizing(options));
  } else {
    const Instance inst = kind == "monge" ? random_monge_instance(options) : random_windowed_instance(options);
    if (auto w = check_monge_full(inst.costs)) {
      throw MongeViolationError("internal error: generated costs are not Monge: " + describe(*w));
    }
    j = instance_to_json(inst);
  }
  emit(j, output, out);
  return kOk;
}

std::vector<Rational> parse_epsilons(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Rational eps = parse_rational(item);
    if (eps <= 0) throw InputError("epsilon must be positive");
    out.push_back(eps);
  }
  return out;
}

int bench(const std::string& suite, const std::string& epsilons, int oracle_max_m, const std::string& csv,
          std::ostream& out) {
  BenchOptions options;
  options.epsilons = parse_epsilons(epsilons);
  options.oracle_max_m = oracle_max_m;
  const std::vector<BenchRow> rows = run_bench(expand_suite(suite), options);
  if (csv.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ofstream file(csv);
    if (!file) throw InputError("cannot write " + csv);
    write_bench_csv(file, rows);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacitated facility location with Monge costs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--input", solve_args.input, "Instance JSON")->required();
  solve_cmd->add_option("--algorithm", solve_args.algorithm)
      ->check(CLI::IsMember({"exact", "fptas", "two-class"}));
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Approximation parameter, e.g. 1/10 or 0.1");
  solve_cmd->add_option("--partition", solve_args.partition, "Client partition JSON for two-class");
  solve_cmd->add_option("--output", solve_args.output, "Solution JSON (default: embedded in the report)");
  solve_cmd->add_flag("--verify-with-oracle", solve_args.verify);

  std::string check_input, check_mode = "full";
  CLI::App* check_cmd = app.add_subcommand("check", "Check the Monge property");
  check_cmd->add_option("--input", check_input)->required();
  check_cmd->add_option("--mode", check_mode)->check(CLI::IsMember({"full", "adjacent", "windowed"}));

  std::string convert_from, convert_input, convert_output;
  CLI::App* convert_cmd = app.add_subcommand("convert", "Reduce to a Monge instance");
  convert_cmd->add_option("--from", convert_from)
      ->required()
      ->check(CLI::IsMember({"lot-sizing", "multi-item", "single-demand"}));
  convert_cmd->add_option("--input", convert_input)->required();
  convert_cmd->add_option("--output", convert_output);

  std::string gen_kind = "monge", gen_output;
  GeneratorOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--kind", gen_kind)->check(CLI::IsMember({"monge", "lot-sizing", "windowed"}));
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--max-cost", gen.max_cost);
  gen_cmd->add_option("--max-demand", gen.max_demand);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--output", gen_output);

  std::string suite, epsilons = "1,0.1", csv;
  int oracle_max_m = 8;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark a suite of instances");
  bench_cmd->add_option("--suite", suite, "Glob pattern or directory")->required();
  bench_cmd->add_option("--epsilons", epsilons, "Comma-separated list");
  bench_cmd->add_option("--oracle-max-m", oracle_max_m);
  bench_cmd->add_option("--csv", csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return solve(solve_args, out);
    if (*check_cmd) return check(check_input, check_mode, out);
    if (*convert_cmd) return convert(convert_from, convert_input, convert_output, out);
    if (*gen_cmd) return generate(gen_kind, gen, gen_output, out);
    if (*bench_cmd) return bench(suite, epsilons, oracle_max_m, csv, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const MongeViolationError& e) {
    err << e.what() << '\n';
    return kNotMonge;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace mcfl::cli
