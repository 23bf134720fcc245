#include "mcfl/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

class ResidualNetwork {
 public:
  explicit ResidualNetwork(int nodes) : out_(nodes) {}

  void add_edge(int from, int to, int64_t capacity, int64_t cost) {
    out_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity, cost});
    out_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, -cost});
  }

  // Bellman-Ford from `source`; pushes one unit along a cheapest path to
  // `sink`. Returns the path cost, or nullopt when the sink is unreachable.
  std::optional<int64_t> augment_unit(int source, int sink) {
    constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();
    const int nodes = static_cast<int>(out_.size());
    std::vector<int64_t> dist(nodes, kUnreached);
    std::vector<int> via(nodes, -1);
    dist[source] = 0;
    for (int round = 0; round < nodes; ++round) {
      bool changed = false;
      for (int u = 0; u < nodes; ++u) {
        if (dist[u] == kUnreached) continue;
        for (int e : out_[u]) {
          const Edge& edge = edges_[e];
          if (edge.capacity > 0 && dist[u] + edge.cost < dist[edge.to]) {
            dist[edge.to] = dist[u] + edge.cost;
            via[edge.to] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[sink] == kUnreached) return std::nullopt;
    for (int v = sink; v != source;) {
      const int e = via[v];
      edges_[e].capacity -= 1;
      edges_[e ^ 1].capacity += 1;
      v = edges_[e ^ 1].to;
    }
    return dist[sink];
  }

  // Units pushed along the forward edge with the given id.
  int64_t used(int edge_id) const { return edges_[edge_id ^ 1].capacity; }

 private:
  struct Edge {
    int to;
    int64_t capacity;
    int64_t cost;
  };
  std::vector<std::vector<int>> out_;
  std::vector<Edge> edges_;
};

}  // namespace

std::optional<TransportPlan> min_cost_transport(std::span<const int64_t> capacities,
                                                std::span<const int64_t> demands, const CostMatrix& costs,
                                                int64_t max_units) {
  const int m = static_cast<int>(capacities.size());
  const int n = static_cast<int>(demands.size());
  if (costs.rows() != m || costs.cols() != n) throw InputError("min_cost_transport: dimension mismatch");
  const int64_t total = std::accumulate(demands.begin(), demands.end(), int64_t{0});
  if (total > max_units) {
    throw LimitExceeded("oracle limited to " + std::to_string(max_units) + " demand units, got " +
                        std::to_string(total));
  }
  const int source = 0;
  const int sink = m + n + 1;
  ResidualNetwork net(m + n + 2);
  for (int i = 0; i < m; ++i) net.add_edge(source, 1 + i, capacities[i], 0);
  std::vector<std::vector<int>> edge_id(m, std::vector<int>(n, -1));
  int next_id = 2 * m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (costs(i, j).is_infinite()) continue;
      net.add_edge(1 + i, 1 + m + j, total, costs(i, j).value());
      edge_id[i][j] = next_id;
      next_id += 2;
    }
  }
  for (int j = 0; j < n; ++j) net.add_edge(1 + m + j, sink, demands[j], 0);

  TransportPlan plan;
  for (int64_t unit = 0; unit < total; ++unit) {
    auto step = net.augment_unit(source, sink);
    if (!step) return std::nullopt;
    plan.cost += *step;
  }
  plan.units.assign(m, std::vector<int64_t>(n, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge_id[i][j] >= 0) plan.units[i][j] = net.used(edge_id[i][j]);
    }
  }
  return plan;
}

Cost min_cost_assignment(const Instance& inst, std::span<const int> open, OracleOptions options) {
  require_valid(inst);
  std::vector<int64_t> capacity(inst.num_facilities(), 0);
  for (int i : open) {
    if (i < 0 || i >= inst.num_facilities()) throw InputError("open facility index out of range");
    capacity[i] = inst.facilities[i].capacity;
  }
  auto plan = min_cost_transport(capacity, inst.demands(), inst.costs, options.max_total_demand);
  return plan ? Cost(plan->cost) : Cost::infinity();
}

OracleResult brute_force_optimum(const Instance& inst, OracleOptions options) {
  require_valid(inst);
  const int m = inst.num_facilities();
  if (m > options.max_facilities) {
    throw LimitExceeded("oracle enumerates subsets of at most " + std::to_string(options.max_facilities) +
                        " facilities");
  }
  if (inst.total_demand() > options.max_total_demand) {
    throw LimitExceeded("oracle limited to " + std::to_string(options.max_total_demand) + " demand units");
  }
  const std::vector<int64_t> demands = inst.demands();
  const int64_t need = inst.total_demand();

  OracleResult best;
  std::vector<int> best_open;
  // Visit subsets so that ties resolve to the lexicographically smallest
  // sorted index list.
  std::vector<std::vector<int>> subsets;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> open;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) open.push_back(i);
    }
    subsets.push_back(std::move(open));
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& open : subsets) {
    int64_t capacity_total = 0;
    int64_t opening = 0;
    std::vector<int64_t> capacity(m, 0);
    for (int i : open) {
      capacity[i] = inst.facilities[i].capacity;
      capacity_total += capacity[i];
      opening += inst.facilities[i].open_cost;
    }
    if (capacity_total < need) continue;
    if (best.optimum.is_finite() && Rational(opening) >= best.optimum.value()) continue;
    auto plan = min_cost_transport(capacity, demands, inst.costs, options.max_total_demand);
    if (!plan) continue;
    const RationalCost total(Rational(opening + plan->cost));
    if (total < best.optimum) {
      best.optimum = total;
      best.best_open = open;
      best.best_flow = Flow{};
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < inst.num_clients(); ++j) {
          if (plan->units[i][j] > 0) best.best_flow.entries[{i, j}] = Rational(plan->units[i][j]);
        }
      }
      best.best_flow.cost = RationalCost(Rational(plan->cost));
    }
  }
  return best;
}

}  // namespace mcfl
