#pragma once

#include <map>
#include <utility>

#include "mcfl/extended.hpp"
#include "mcfl/instance.hpp"

namespace mcfl {

// Sparse transshipment: (facility, client) -> amount shipped, 0-based.
struct Flow {
  std::map<std::pair<int, int>, Rational> entries;
  RationalCost cost;

  Rational row_sum(int facility) const;
  Rational column_sum(int client) const;
};

// Sum of c_ij * x_ij over positive entries under extended arithmetic.
RationalCost flow_cost(const CostMatrix& costs, const std::map<std::pair<int, int>, Rational>& entries);

}  // namespace mcfl
