#pragma once

#include <cstdint>
#include <random>

#include "mcfl/instance.hpp"
#include "mcfl/reductions.hpp"

namespace mcfl {

struct GeneratorOptions {
  int m = 5;
  int n = 5;
  int64_t max_cost = 10;
  int64_t max_demand = 6;
  int64_t max_open_cost = 20;
  int64_t max_capacity = 15;
  uint64_t seed = 1;
};

// Costs c_ij = row_i + col_j + (sum of a nonnegative density over the
// rectangle p >= i, q <= j), which is Monge by construction. Entries stay in
// [0, max_cost].
CostMatrix random_monge_matrix(int m, int n, int64_t max_cost, std::mt19937_64& rng);

// Random Monge instance: demands in [1, max_demand], opening costs in
// [0, max_open_cost], capacities in [1, max_capacity].
Instance random_monge_instance(const GeneratorOptions& options, std::mt19937_64& rng);
Instance random_monge_instance(const GeneratorOptions& options);

// Clients carry nondecreasing release dates and deadlines; costs are
// infinite outside each client's window and Monge inside.
Instance random_windowed_instance(const GeneratorOptions& options, std::mt19937_64& rng);
Instance random_windowed_instance(const GeneratorOptions& options);

// Single-item lot-sizing over `n` periods. Orders cost up to max_open_cost
// with capacity in [0, max_capacity]; demands in [0, max_demand]; holding
// costs in [0, max_cost].
LotSizingInstance random_lot_sizing(const GeneratorOptions& options, std::mt19937_64& rng);
LotSizingInstance random_lot_sizing(const GeneratorOptions& options);

}  // namespace mcfl
