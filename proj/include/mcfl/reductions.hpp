#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcfl/instance.hpp"

namespace mcfl {

struct LotSizingOrder {
  int64_t cost = 0;
  int64_t capacity = 0;
};

// `period` is 0-based; `item` only matters for multi-item instances.
struct LotSizingDemand {
  int period = 0;
  int item = 0;
  int64_t amount = 0;
};

// Capacitated lot-sizing with linear holding costs: one order opportunity
// per period, holding[t] charged per unit carried from period t to t+1.
// item_holding optionally lists per-item holding vectors; the reductions
// accept them only when they all coincide.
struct LotSizingInstance {
  int horizon = 1;
  std::vector<LotSizingOrder> orders;
  std::vector<LotSizingDemand> demands;
  std::vector<int64_t> holding;
  std::map<int, std::vector<int64_t>> item_holding;
};

// Unit cost of carrying stock from period `from` to period `to`:
// sum of holding[from..to-1], infinite when from > to.
Cost carrying_cost(const std::vector<int64_t>& holding, int from, int to);

// Single-item reduction: a facility per order period (periods with zero
// capacity cannot order and are skipped), a client per period with positive
// demand, both in time order. Throws InputError for multi-item input or bad
// data, MongeViolationError if the result were not Monge.
Instance lot_sizing_to_cfl(const LotSizingInstance& ls);

// Multi-item reduction with identical linear holding costs: a client per
// (period, item) with positive demand, ordered by period then item.
Instance multi_item_to_cfl(const LotSizingInstance& ls);

// Single-client instances are Monge vacuously; this is the identity embedding.
Instance single_demand_to_cfl(std::vector<Facility> facilities, Client client, const std::vector<Cost>& costs);

}  // namespace mcfl
