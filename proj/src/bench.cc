#include "mcfl/bench.hpp"

#include <glob.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <sstream>

#include "mcfl/errors.hpp"
#include "mcfl/exact_dp.hpp"
#include "mcfl/fptas.hpp"
#include "mcfl/io.hpp"
#include "mcfl/oracle.hpp"
#include "mcfl/two_class.hpp"

namespace mcfl {
namespace {

std::string format_ratio(const RationalCost& cost, const RationalCost& oracle) {
  if (cost.is_infinite() || oracle.is_infinite()) return cost == oracle ? "1" : "";
  if (oracle.value() == 0) return cost.value() == 0 ? "1" : "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << to_double(cost.value() / oracle.value());
  return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<std::string> expand_suite(const std::string& pattern) {
  std::string effective = pattern;
  if (std::filesystem::is_directory(pattern)) effective = (std::filesystem::path(pattern) / "*.json").string();
  glob_t g{};
  std::vector<std::string> files;
  if (::glob(effective.c_str(), 0, nullptr, &g) == 0) {
    for (std::size_t k = 0; k < g.gl_pathc; ++k) files.emplace_back(g.gl_pathv[k]);
  }
  ::globfree(&g);
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<BenchRow> run_bench(const std::vector<std::string>& files, const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (const std::string& file : files) {
    Instance inst;
    try {
      inst = read_instance(file);
      require_valid(inst);
    } catch (const std::exception&) {
      BenchRow row;
      row.instance = file;
      row.algorithm = "error";
      rows.push_back(row);
      continue;
    }

    RationalCost oracle = RationalCost::infinity();
    bool have_oracle = false;
    if (inst.num_facilities() <= options.oracle_max_m) {
      try {
        oracle = brute_force_optimum(inst).optimum;
        have_oracle = true;
      } catch (const LimitExceeded&) {
      }
    }

    auto record = [&](const std::string& algorithm, const std::string& epsilon,
                      const std::function<Solution()>& solve) {
      BenchRow row;
      row.instance = file;
      row.m = inst.num_facilities();
      row.n = inst.num_clients();
      row.total_demand = inst.total_demand();
      row.algorithm = algorithm;
      row.epsilon = epsilon;
      const auto start = std::chrono::steady_clock::now();
      try {
        const Solution sol = solve();
        row.wall_ms = elapsed_ms(start);
        row.cost = sol.total_cost.str();
        if (have_oracle) row.ratio = format_ratio(sol.total_cost, oracle);
      } catch (const InfeasibleError&) {
        row.wall_ms = elapsed_ms(start);
        row.cost = "inf";
        if (have_oracle) row.ratio = format_ratio(RationalCost::infinity(), oracle);
      } catch (const std::exception&) {
        row.wall_ms = elapsed_ms(start);
        row.cost = "error";
      }
      if (have_oracle) row.oracle_cost = oracle.str();
      rows.push_back(row);
    };

    if (inst.total_demand() <= options.exact_max_demand) {
      record("exact", "", [&] { return solve_exact(inst); });
    }
    for (const Rational& eps : options.epsilons) {
      record("fptas", to_string(eps), [&] { return solve_fptas(inst, eps).solution; });
    }
    const bool windowed = std::any_of(inst.clients.begin(), inst.clients.end(),
                                      [](const Client& c) { return c.release.has_value(); });
    if (windowed) {
      const ClientPartition partition = partition_by_release(inst);
      for (const Rational& eps : options.epsilons) {
        record("two-class", to_string(eps),
               [&] { return solve_two_class_fptas(inst, partition, eps).solution; });
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,m,n,total_demand,algorithm,epsilon,cost,oracle_cost,ratio,wall_ms\n";
  for (const BenchRow& r : rows) {
    out << r.instance << ',';
    if (r.algorithm == "error") {
      out << ",,,error,,,,,\n";
      continue;
    }
    out << r.m << ',' << r.n << ',' << r.total_demand << ',' << r.algorithm << ',' << r.epsilon << ','
        << r.cost << ',' << r.oracle_cost << ',' << r.ratio << ',' << std::fixed << std::setprecision(3)
        << r.wall_ms << std::defaultfloat << '\n';
  }
}

}  // namespace mcfl
