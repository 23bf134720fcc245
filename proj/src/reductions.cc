#include "mcfl/reductions.hpp"

#include <algorithm>

#include "mcfl/errors.hpp"
#include "mcfl/monge.hpp"

namespace mcfl {
namespace {

void validate(const LotSizingInstance& ls) {
  if (ls.horizon < 1) throw InputError("lot-sizing horizon must be at least 1");
  if (static_cast<int>(ls.orders.size()) != ls.horizon) throw InputError("need exactly one order entry per period");
  auto check_holding = [&](const std::vector<int64_t>& h) {
    if (static_cast<int>(h.size()) != ls.horizon - 1) {
      throw InputError("holding costs must cover the horizon - 1 period boundaries");
    }
    for (int64_t v : h) {
      if (v < 0) throw InputError("holding costs must be nonnegative");
    }
  };
  if (ls.item_holding.empty() || !ls.holding.empty()) check_holding(ls.holding);
  for (const auto& [item, h] : ls.item_holding) check_holding(h);
  for (const LotSizingOrder& o : ls.orders) {
    if (o.cost < 0 || o.capacity < 0) throw InputError("order cost and capacity must be nonnegative");
  }
  for (const LotSizingDemand& d : ls.demands) {
    if (d.period < 0 || d.period >= ls.horizon) throw InputError("demand period out of range");
    if (d.amount < 0) throw InputError("demand amounts must be nonnegative");
  }
}

// The holding vector shared by all items; differing vectors are rejected.
std::vector<int64_t> shared_holding(const LotSizingInstance& ls) {
  std::vector<int64_t> shared = ls.holding;
  for (const auto& [item, h] : ls.item_holding) {
    if (shared.empty() && ls.horizon > 1) shared = h;
    if (h != shared) {
      throw InputError("item " + std::to_string(item) +
                       " has its own holding costs; only identical holding costs reduce to Monge costs");
    }
  }
  return shared;
}

Instance build(const LotSizingInstance& ls, const std::vector<int64_t>& holding,
               const std::map<std::pair<int, int>, int64_t>& demand_by_period_item) {
  Instance inst;
  std::vector<int> order_period;
  for (int t = 0; t < ls.horizon; ++t) {
    if (ls.orders[t].capacity < 1) continue;
    inst.facilities.push_back({ls.orders[t].cost, ls.orders[t].capacity});
    order_period.push_back(t);
  }
  std::vector<int> client_period;
  for (const auto& [key, amount] : demand_by_period_item) {
    if (amount <= 0) continue;
    inst.clients.push_back({amount, std::nullopt, std::nullopt});
    client_period.push_back(key.first);
  }
  if (order_period.empty()) throw InputError("no period can place an order (all capacities are zero)");
  if (client_period.empty()) throw InputError("no period has positive demand");
  inst.costs = CostMatrix(static_cast<int>(order_period.size()), static_cast<int>(client_period.size()));
  for (std::size_t i = 0; i < order_period.size(); ++i) {
    for (std::size_t j = 0; j < client_period.size(); ++j) {
      inst.costs(static_cast<int>(i), static_cast<int>(j)) = carrying_cost(holding, order_period[i], client_period[j]);
    }
  }
  if (check_monge_full(inst.costs)) throw MongeViolationError("lot-sizing reduction produced non-Monge costs");
  return inst;
}

}  // namespace

Cost carrying_cost(const std::vector<int64_t>& holding, int from, int to) {
  if (from > to) return Cost::infinity();
  Cost total(0);
  for (int k = from; k < to; ++k) total += Cost(holding.at(k));
  return total;
}

Instance lot_sizing_to_cfl(const LotSizingInstance& ls) {
  validate(ls);
  std::map<std::pair<int, int>, int64_t> by_period;
  int item = -1;
  for (const LotSizingDemand& d : ls.demands) {
    if (item == -1) item = d.item;
    if (d.item != item) throw InputError("lot_sizing_to_cfl handles a single item; use the multi-item reduction");
    by_period[{d.period, 0}] += d.amount;
  }
  return build(ls, shared_holding(ls), by_period);
}

Instance multi_item_to_cfl(const LotSizingInstance& ls) {
  validate(ls);
  std::map<std::pair<int, int>, int64_t> by_period_item;
  for (const LotSizingDemand& d : ls.demands) by_period_item[{d.period, d.item}] += d.amount;
  return build(ls, shared_holding(ls), by_period_item);
}

Instance single_demand_to_cfl(std::vector<Facility> facilities, Client client, const std::vector<Cost>& costs) {
  if (costs.size() != facilities.size()) throw InputError("need one cost per facility");
  Instance inst;
  inst.facilities = std::move(facilities);
  inst.clients.push_back(std::move(client));
  inst.costs = CostMatrix(static_cast<int>(costs.size()), 1);
  for (std::size_t i = 0; i < costs.size(); ++i) inst.costs(static_cast<int>(i), 0) = costs[i];
  return inst;
}

}  // namespace mcfl
