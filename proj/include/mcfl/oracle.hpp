#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcfl/flow.hpp"
#include "mcfl/instance.hpp"

namespace mcfl {

// Reference solvers for verification at desk scale. Nothing here assumes the
// Monge property.
struct OracleOptions {
  int64_t max_total_demand = 200;
  int max_facilities = 20;
};

struct TransportPlan {
  std::vector<std::vector<int64_t>> units;  // [facility][client]
  int64_t cost = 0;
};

// Minimum-cost shipment of every demand unit with per-facility capacities,
// by successive shortest paths one unit at a time. nullopt when the demand
// cannot be routed over finite edges. Throws LimitExceeded above max_units.
std::optional<TransportPlan> min_cost_transport(std::span<const int64_t> capacities,
                                                std::span<const int64_t> demands, const CostMatrix& costs,
                                                int64_t max_units = 200);

// Transport cost of serving all demand from the `open` facilities (0-based
// indices), infinite when impossible.
Cost min_cost_assignment(const Instance& inst, std::span<const int> open, OracleOptions options = {});

struct OracleResult {
  RationalCost optimum = RationalCost::infinity();
  std::vector<int> best_open;
  Flow best_flow;  // units shipped, not fractions
};

// Minimum over every facility subset of opening plus transport cost. Ties
// keep the lexicographically smallest subset.
OracleResult brute_force_optimum(const Instance& inst, OracleOptions options = {});

}  // namespace mcfl
