#include "mcfl/exact_dp.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcfl/errors.hpp"

namespace mcfl {

ExactDp::ExactDp(const Instance& inst, ExactDpOptions options) : inst_(inst), line_(inst.demands()) {
  require_valid(inst);
  if (inst.total_demand() > options.max_total_demand) {
    throw LimitExceeded("total demand " + std::to_string(inst.total_demand()) + " exceeds the exact solver cap of " +
                        std::to_string(options.max_total_demand) + "; use the FPTAS instead");
  }
}

Cost ExactDp::value(int facility, int client, int64_t demand_at_client) {
  const int m = inst_.num_facilities();
  const int n = inst_.num_clients();
  if (facility < 0 || facility > m) throw InputError("facility index out of range");
  if (client < 0 || client > n) throw InputError("client index out of range");
  int64_t remaining = 0;
  if (client == n) {
    if (demand_at_client != 0) throw InputError("past the last client the demand must be zero");
  } else {
    if (demand_at_client < 0 || demand_at_client > inst_.clients[client].demand) {
      throw InputError("demand at client out of range");
    }
    remaining = demand_at_client + line_.suffix(client + 1);
  }
  return evaluate(facility, remaining).value;
}

ExactDp::Entry ExactDp::evaluate(int facility, int64_t remaining) {
  if (remaining == 0) return {Cost(0), 0};
  const int m = inst_.num_facilities();
  if (facility == m) return {Cost::infinity(), 0};
  const uint64_t key = static_cast<uint64_t>(facility) * static_cast<uint64_t>(line_.total() + 1) +
                       static_cast<uint64_t>(remaining);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Entry best{evaluate(facility + 1, remaining).value, 0};

  const Facility& f = inst_.facilities[facility];
  const int n = inst_.num_clients();
  int client = line_.client_at_remaining(remaining);
  int64_t left_here = remaining - line_.suffix(client + 1);
  int64_t transport = 0;
  const int64_t max_units = std::min(f.capacity, remaining);
  for (int64_t u = 1; u <= max_units; ++u) {
    const Cost& c = inst_.cost(facility, client);
    // Every larger u also ships this unit, so all of them are infinite.
    if (c.is_infinite()) break;
    transport += c.value();
    if (--left_here == 0 && client + 1 < n) {
      ++client;
      left_here = inst_.clients[client].demand;
    }
    const Cost rest = evaluate(facility + 1, remaining - u).value;
    const Cost candidate = Cost(f.open_cost) + Cost(transport) + rest;
    if (candidate < best.value) best = {candidate, u};
  }
  memo_.emplace(key, best);
  return best;
}

Solution ExactDp::solve() {
  const int m = inst_.num_facilities();
  int64_t remaining = line_.total();
  const Cost optimum = evaluate(0, remaining).value;
  if (optimum.is_infinite()) return Solution{};

  std::vector<std::optional<std::pair<Rational, Rational>>> served(m);
  for (int i = 0; i < m && remaining > 0; ++i) {
    const Entry e = evaluate(i, remaining);
    if (e.units > 0) {
      served[i] = std::make_pair(Rational(remaining - e.units), Rational(remaining));
      remaining -= e.units;
    }
  }
  Solution sol = solution_from_intervals(inst_, line_, served);
  if (remaining != 0 || sol.total_cost != to_rational(optimum)) {
    throw std::logic_error("exact DP reconstruction disagrees with its optimal value");
  }
  return sol;
}

Solution solve_exact(const Instance& inst, ExactDpOptions options) {
  ExactDp dp(inst, options);
  return dp.solve();
}

}  // namespace mcfl
