#include "mcfl/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "mcfl/errors.hpp"

namespace mcfl {

Rational Flow::row_sum(int facility) const {
  Rational sum = 0;
  for (const auto& [key, amount] : entries) {
    if (key.first == facility) sum += amount;
  }
  return sum;
}

Rational Flow::column_sum(int client) const {
  Rational sum = 0;
  for (const auto& [key, amount] : entries) {
    if (key.second == client) sum += amount;
  }
  return sum;
}

RationalCost flow_cost(const CostMatrix& costs, const std::map<std::pair<int, int>, Rational>& entries) {
  RationalCost total;
  for (const auto& [key, amount] : entries) {
    if (amount == 0) continue;
    const Cost& c = costs(key.first, key.second);
    if (c.is_infinite()) return RationalCost::infinity();
    total += RationalCost(amount * c.value());
  }
  return total;
}

Flow greedy_transport(std::span<const int64_t> supplies, std::span<const int64_t> demands,
                      const CostMatrix& costs) {
  if (static_cast<int>(supplies.size()) != costs.rows() || static_cast<int>(demands.size()) != costs.cols()) {
    throw InputError("greedy_transport: supply/demand sizes do not match the cost matrix");
  }
  for (int64_t s : supplies) {
    if (s < 0) throw InputError("greedy_transport: negative supply");
  }
  for (int64_t d : demands) {
    if (d < 0) throw InputError("greedy_transport: negative demand");
  }
  const int64_t supply_total = std::accumulate(supplies.begin(), supplies.end(), int64_t{0});
  const int64_t demand_total = std::accumulate(demands.begin(), demands.end(), int64_t{0});
  if (supply_total != demand_total) {
    throw InputError("greedy_transport: unbalanced totals (" + std::to_string(supply_total) + " supply vs " +
                     std::to_string(demand_total) + " demand)");
  }

  std::vector<int64_t> s(supplies.begin(), supplies.end());
  std::vector<int64_t> d(demands.begin(), demands.end());
  const int m = costs.rows();
  const int n = costs.cols();
  Flow flow;
  int i = 0;
  int j = 0;
  // Decrement before advancing so the residual of the index that stays put
  // is the one that shrinks.
  while (i < m && j < n) {
    if (s[i] >= d[j]) {
      if (d[j] > 0) flow.entries[{i, j}] += Rational(d[j]);
      s[i] -= d[j];
      d[j] = 0;
      ++j;
    } else {
      if (s[i] > 0) flow.entries[{i, j}] += Rational(s[i]);
      d[j] -= s[i];
      s[i] = 0;
      ++i;
    }
  }
  flow.cost = flow_cost(costs, flow.entries);
  return flow;
}

GreedyServeResult greedy_serve(const Instance& inst, int facility, int64_t units, int client,
                               int64_t demand_at_client) {
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  if (facility < 0 || facility >= m) throw InputError("greedy_serve: facility index out of range");
  if (client < 0 || client >= n) throw InputError("greedy_serve: client index out of range");
  if (demand_at_client < 0 || demand_at_client > inst.clients[client].demand) {
    throw InputError("greedy_serve: demand at client out of range");
  }
  int64_t available = demand_at_client;
  for (int k = client + 1; k < n; ++k) available += inst.clients[k].demand;
  if (units < 0 || units > available) throw InputError("greedy_serve: units exceed the remaining demand");

  // next_client is the first l with d + sum_{k=j+1..l} d_k > u.
  GreedyServeResult out;
  int64_t covered = demand_at_client;  // d + sum_{k=j+1..l} d_k for the current l
  int l = client;
  while (l < n && covered <= units) {
    ++l;
    if (l < n) covered += inst.clients[l].demand;
  }
  out.next_client = l;
  if (l == n) {
    out.demand_remaining = 0;
  } else {
    // d_l - (u - (d + sum_{k=j+1..l-1} d_k))
    const int64_t before_l = l == client ? 0 : covered - inst.clients[l].demand;
    const int64_t d_l = l == client ? demand_at_client : inst.clients[l].demand;
    out.demand_remaining = d_l - (units - before_l);
  }

  const auto& c = inst.costs;
  if (l == client) {
    out.transport_cost = scaled(c(facility, client), demand_at_client - out.demand_remaining);
  } else {
    Cost total = scaled(c(facility, client), demand_at_client);
    for (int k = client + 1; k < l; ++k) total += scaled(c(facility, k), inst.clients[k].demand);
    if (l < n) total += scaled(c(facility, l), inst.clients[l].demand - out.demand_remaining);
    out.transport_cost = total;
  }
  return out;
}

DemandLine::DemandLine(std::span<const int64_t> demands) : suffix_(demands.size() + 1, 0) {
  for (int j = static_cast<int>(demands.size()) - 1; j >= 0; --j) suffix_[j] = suffix_[j + 1] + demands[j];
}

Rational DemandLine::remaining(int j, const Rational& met) const {
  const Rational lo = max(Rational(suffix_[j + 1]), min(Rational(suffix_[j]), met));
  return Rational(suffix_[j]) - lo;
}

Rational DemandLine::overlap(int j, const Rational& lo, const Rational& hi) const {
  const Rational a = max(lo, Rational(suffix_[j + 1]));
  const Rational b = min(hi, Rational(suffix_[j]));
  return b > a ? Rational(b - a) : Rational(0);
}

int DemandLine::client_at_remaining(int64_t position) const {
  // Largest j with suffix(j) >= position, i.e. suffix(j+1) < position <= suffix(j).
  auto it = std::upper_bound(suffix_.rbegin(), suffix_.rend(), position - 1);
  return static_cast<int>(std::distance(it, suffix_.rend())) - 1;
}

std::vector<Rational> residual_profile(const Instance& inst, const Rational& met) {
  DemandLine line(inst.demands());
  if (met < 0 || met > line.total()) throw InputError("residual_profile: served amount out of range");
  std::vector<Rational> out(inst.clients.size());
  for (int j = 0; j < line.size(); ++j) out[j] = line.remaining(j, met);
  return out;
}

Rational serve_from_right(std::span<const Cost> unit_costs, const DemandLine& line, const Rational& met,
                          Rational money, Rational capacity) {
  Rational served = 0;
  for (int j = line.size() - 1; j >= 0; --j) {
    if (line.suffix(j) <= met) continue;  // already served
    const Rational rest = line.remaining(j, met);
    if (unit_costs[j].is_infinite()) break;
    const int64_t rate = unit_costs[j].value();
    Rational take = min(rest, capacity);
    if (rate > 0) take = min(take, Rational(money / rate));
    served += take;
    capacity -= take;
    money -= take * rate;
    if (take < rest) break;
  }
  return served;
}

Rational demand_met(const Instance& inst, const DemandLine& line, int facility, const Rational& met,
                    int64_t budget) {
  if (facility < 0 || facility >= inst.num_facilities()) throw InputError("demand_met: facility out of range");
  if (met < 0 || met > line.total()) throw InputError("demand_met: served amount out of range");
  if (budget < 0) throw InputError("demand_met: negative budget");
  const Facility& f = inst.facilities[facility];
  if (budget < f.open_cost) return 0;
  return serve_from_right(inst.costs.row(facility), line, met, Rational(budget - f.open_cost),
                          Rational(f.capacity));
}

Rational demand_met(const Instance& inst, int facility, const Rational& met, int64_t budget) {
  return demand_met(inst, DemandLine(inst.demands()), facility, met, budget);
}

}  // namespace mcfl
