#include "mcfl/solution.hpp"

#include <algorithm>
#include <set>

namespace mcfl {

RationalCost evaluate_cost(const Instance& inst, const Solution& sol) {
  RationalCost total;
  for (int i : sol.open) total += RationalCost(Rational(inst.facilities[i].open_cost));
  for (const auto& [key, fraction] : sol.assignment) {
    if (fraction == 0) continue;
    const Cost& c = inst.cost(key.first, key.second);
    if (c.is_infinite()) return RationalCost::infinity();
    total += RationalCost(Rational(c.value()) * inst.clients[key.second].demand * fraction);
  }
  return total;
}

std::vector<std::string> check_solution(const Instance& inst, const Solution& sol) {
  std::vector<std::string> problems;
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  if (!sol.feasible()) {
    if (!sol.assignment.empty()) problems.push_back("infeasible solution carries an assignment");
    return problems;
  }
  std::set<int> open(sol.open.begin(), sol.open.end());
  if (open.size() != sol.open.size()) problems.push_back("duplicate open facility");
  for (int i : open) {
    if (i < 0 || i >= m) problems.push_back("open facility index out of range");
  }
  std::vector<Rational> coverage(n, Rational(0));
  std::vector<Rational> load(m, Rational(0));
  for (const auto& [key, fraction] : sol.assignment) {
    const auto [i, j] = key;
    if (i < 0 || i >= m || j < 0 || j >= n) {
      problems.push_back("assignment index out of range");
      continue;
    }
    if (fraction < 0 || fraction > 1) {
      problems.push_back("fraction outside [0,1] at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    if (fraction > 0 && !open.contains(i)) {
      problems.push_back("client " + std::to_string(j + 1) + " assigned to closed facility " + std::to_string(i + 1));
    }
    coverage[j] += fraction;
    load[i] += fraction * inst.clients[j].demand;
  }
  for (int j = 0; j < n; ++j) {
    if (coverage[j] != 1) problems.push_back("client " + std::to_string(j + 1) + " coverage is " + to_string(coverage[j]));
  }
  for (int i = 0; i < m; ++i) {
    if (load[i] > inst.facilities[i].capacity) {
      problems.push_back("facility " + std::to_string(i + 1) + " load " + to_string(load[i]) + " exceeds capacity");
    }
  }
  RationalCost recomputed = evaluate_cost(inst, sol);
  if (recomputed != sol.total_cost) {
    problems.push_back("reported cost " + sol.total_cost.str() + " differs from recomputed " + recomputed.str());
  }
  return problems;
}

Solution solution_from_intervals(const Instance& inst, const DemandLine& line,
                                 const std::vector<std::optional<std::pair<Rational, Rational>>>& served) {
  Solution sol;
  for (int i = 0; i < static_cast<int>(served.size()); ++i) {
    if (!served[i] || !(served[i]->first < served[i]->second)) continue;
    sol.open.push_back(i);
    for (int j = 0; j < line.size(); ++j) {
      Rational amount = line.overlap(j, served[i]->first, served[i]->second);
      if (amount > 0) sol.assignment[{i, j}] = amount / line.demand(j);
    }
  }
  sol.total_cost = evaluate_cost(inst, sol);
  return sol;
}

}  // namespace mcfl
