#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mcfl/rational.hpp"

namespace mcfl {

struct BenchRow {
  std::string instance;
  int m = 0;
  int n = 0;
  int64_t total_demand = 0;
  std::string algorithm;  // "exact", "fptas", "two-class" or "error"
  std::string epsilon;
  std::string cost;
  std::string oracle_cost;
  std::string ratio;
  double wall_ms = 0;
};

struct BenchOptions {
  std::vector<Rational> epsilons;
  int oracle_max_m = 8;
  int64_t exact_max_demand = 20'000;
};

// Files matching a glob pattern, sorted; a directory expands to its *.json.
std::vector<std::string> expand_suite(const std::string& pattern);

// Runs exact, then fptas for every epsilon, then two-class for instances
// whose clients carry release dates. Unreadable or invalid instances give a
// single "error" row. Rows follow suite order.
std::vector<BenchRow> run_bench(const std::vector<std::string>& files, const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mcfl
