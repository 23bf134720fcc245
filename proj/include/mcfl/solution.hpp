#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcfl/extended.hpp"
#include "mcfl/instance.hpp"
#include "mcfl/kernel.hpp"

namespace mcfl {

// Open facilities plus the fraction of each client's demand routed to each
// facility. An infeasible result has an infinite cost and no assignment.
struct Solution {
  std::vector<int> open;
  std::map<std::pair<int, int>, Rational> assignment;  // (facility, client) -> fraction of d_j
  RationalCost total_cost = RationalCost::infinity();

  bool feasible() const { return total_cost.is_finite(); }
};

// Sum of opening costs of `open` plus c_ij d_j x_ij over the assignment.
RationalCost evaluate_cost(const Instance& inst, const Solution& sol);

// Checks every solution invariant: fractions in [0, 1], assignment only to
// open facilities, full coverage, capacities and the reported cost. Returns
// the violated ones (empty when consistent).
std::vector<std::string> check_solution(const Instance& inst, const Solution& sol);

// Builds a solution from facility service intervals on the demand line.
// `served[i]` is the position interval [lo, hi) served by facility i, or
// nullopt. A facility opens iff its interval is nonempty. The cost is
// recomputed from the resulting assignment.
Solution solution_from_intervals(const Instance& inst, const DemandLine& line,
                                 const std::vector<std::optional<std::pair<Rational, Rational>>>& served);

}  // namespace mcfl
