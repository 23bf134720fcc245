#include "mcfl/generate.hpp"

#include <algorithm>

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

int64_t uniform(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

void check_options(const GeneratorOptions& o) {
  if (o.m < 1 || o.n < 1) throw InputError("m and n must be at least 1");
  if (o.max_cost < 0 || o.max_open_cost < 0) throw InputError("cost limits must be nonnegative");
  if (o.max_demand < 1 || o.max_capacity < 1) throw InputError("demand and capacity limits must be positive");
}

std::vector<Facility> random_facilities(const GeneratorOptions& o, std::mt19937_64& rng) {
  std::vector<Facility> out(o.m);
  for (Facility& f : out) {
    f.open_cost = uniform(rng, 0, o.max_open_cost);
    f.capacity = uniform(rng, 1, o.max_capacity);
  }
  return out;
}

}  // namespace

CostMatrix random_monge_matrix(int m, int n, int64_t max_cost, std::mt19937_64& rng) {
  const int64_t third = max_cost / 3;
  std::vector<int64_t> row(m), col(n);
  for (auto& r : row) r = uniform(rng, 0, third);
  for (auto& c : col) c = uniform(rng, 0, third);
  const int64_t mass =
      uniform(rng, 0, max_cost - *std::max_element(row.begin(), row.end()) - *std::max_element(col.begin(), col.end()));

  std::vector<std::vector<int64_t>> density(m, std::vector<int64_t>(n, 0));
  for (int64_t u = 0; u < mass; ++u) density[uniform(rng, 0, m - 1)][uniform(rng, 0, n - 1)] += 1;

  // rect[i][j] = sum of density over p >= i, q <= j.
  std::vector<std::vector<int64_t>> rect(m + 1, std::vector<int64_t>(n, 0));
  for (int i = m - 1; i >= 0; --i) {
    int64_t run = 0;
    for (int j = 0; j < n; ++j) {
      run += density[i][j];
      rect[i][j] = rect[i + 1][j] + run;
    }
  }
  CostMatrix costs(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) costs(i, j) = Cost(row[i] + col[j] + rect[i][j]);
  }
  return costs;
}

Instance random_monge_instance(const GeneratorOptions& o, std::mt19937_64& rng) {
  check_options(o);
  Instance inst;
  inst.facilities = random_facilities(o, rng);
  inst.clients.resize(o.n);
  for (Client& c : inst.clients) c.demand = uniform(rng, 1, o.max_demand);
  inst.costs = random_monge_matrix(o.m, o.n, o.max_cost, rng);
  return inst;
}

Instance random_monge_instance(const GeneratorOptions& o) {
  std::mt19937_64 rng(o.seed);
  return random_monge_instance(o, rng);
}

Instance random_windowed_instance(const GeneratorOptions& o, std::mt19937_64& rng) {
  Instance inst = random_monge_instance(o, rng);
  std::vector<int> release(o.n), deadline(o.n);
  for (int j = 0; j < o.n; ++j) {
    release[j] = static_cast<int>(uniform(rng, 0, o.m - 1));
    deadline[j] = static_cast<int>(uniform(rng, 0, o.m - 1));
  }
  std::sort(release.begin(), release.end());
  std::sort(deadline.begin(), deadline.end());
  for (int j = 0; j < o.n; ++j) {
    // Sorting both lists keeps them monotone; widening keeps each window valid.
    deadline[j] = std::max(deadline[j], release[j]);
    inst.clients[j].release = release[j];
    inst.clients[j].deadline = deadline[j];
    for (int i = 0; i < o.m; ++i) {
      if (i < release[j] || i > deadline[j]) inst.costs(i, j) = Cost::infinity();
    }
  }
  return inst;
}

Instance random_windowed_instance(const GeneratorOptions& o) {
  std::mt19937_64 rng(o.seed);
  return random_windowed_instance(o, rng);
}

LotSizingInstance random_lot_sizing(const GeneratorOptions& o, std::mt19937_64& rng) {
  check_options(o);
  LotSizingInstance ls;
  ls.horizon = o.n;
  for (int t = 0; t < o.n; ++t) {
    ls.orders.push_back({uniform(rng, 0, o.max_open_cost), uniform(rng, 0, o.max_capacity)});
  }
  for (int t = 0; t < o.n; ++t) ls.demands.push_back({t, 0, uniform(rng, 0, o.max_demand)});
  for (int t = 0; t + 1 < o.n; ++t) ls.holding.push_back(uniform(rng, 0, o.max_cost));
  return ls;
}

LotSizingInstance random_lot_sizing(const GeneratorOptions& o) {
  std::mt19937_64 rng(o.seed);
  return random_lot_sizing(o, rng);
}

}  // namespace mcfl
