#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcfl/flow.hpp"
#include "mcfl/instance.hpp"

namespace mcfl {

// Greedy (northwest-corner) transport: walk facilities and clients in index
// order, shipping as much as possible from the current client to the current
// facility. Optimal when `costs` is Monge. Throws InputError if the totals
// differ. A positive shipment over an infinite edge yields an infinite cost.
Flow greedy_transport(std::span<const int64_t> supplies, std::span<const int64_t> demands,
                      const CostMatrix& costs);

// Where `units` of greedy left-to-right service from facility `facility`
// ends, starting at client `client` with `demand_at_client` units left there.
struct GreedyServeResult {
  int next_client = 0;           // first client not fully served; n when everything is served
  int64_t demand_remaining = 0;  // units still unserved at next_client
  Cost transport_cost;
};

GreedyServeResult greedy_serve(const Instance& inst, int facility, int64_t units, int client,
                               int64_t demand_at_client);

// Positions on the "demand line": all demand laid out from the last client
// towards the first, so position 0 is the first unit of client n-1 and
// client j covers [suffix(j+1), suffix(j)).
class DemandLine {
 public:
  explicit DemandLine(std::span<const int64_t> demands);

  int size() const { return static_cast<int>(suffix_.size()) - 1; }
  int64_t total() const { return suffix_.front(); }
  int64_t demand(int j) const { return suffix_[j] - suffix_[j + 1]; }
  int64_t suffix(int j) const { return suffix_[j]; }

  // Unserved demand of client j once `met` units were taken from the right.
  Rational remaining(int j, const Rational& met) const;

  // Demand of client j lying in the position interval [lo, hi).
  Rational overlap(int j, const Rational& lo, const Rational& hi) const;

  // Client holding the position just below `position` (the last unserved
  // unit when `position` units remain unserved from the left). Requires
  // position > 0.
  int client_at_remaining(int64_t position) const;

 private:
  std::vector<int64_t> suffix_;
};

// Remaining demand of every client after removing `met` units starting from
// the last client. Throws InputError if met exceeds the total demand.
std::vector<Rational> residual_profile(const Instance& inst, const Rational& met);

// Serves the residual of `line` after `met` units from the right, walking
// towards the first client, paying unit_costs[j] per unit out of `money` and
// never exceeding `capacity`. Stops at an infinite-cost client with positive
// residual. Returns the amount served.
Rational serve_from_right(std::span<const Cost> unit_costs, const DemandLine& line, const Rational& met,
                          Rational money, Rational capacity);

// DM: demand served by `facility` given `met` units already served from the
// right and `budget` to spend on opening plus transport. Zero when the budget
// does not cover the opening cost.
Rational demand_met(const Instance& inst, int facility, const Rational& met, int64_t budget);
Rational demand_met(const Instance& inst, const DemandLine& line, int facility, const Rational& met,
                    int64_t budget);

}  // namespace mcfl
