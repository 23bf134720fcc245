#include "mcfl/monge.hpp"

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

std::optional<MongeWitness> violation(const CostMatrix& c, int h, int i, int j, int k) {
  Cost lhs = c(h, j) + c(i, k);
  Cost rhs = c(h, k) + c(i, j);
  if (lhs <= rhs) return std::nullopt;
  return MongeWitness{h, i, j, k, lhs, rhs};
}

}  // namespace

std::optional<MongeWitness> check_monge_full(const CostMatrix& costs) {
  const int m = costs.rows();
  const int n = costs.cols();
  for (int h = 0; h < m; ++h) {
    for (int i = h + 1; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (auto w = violation(costs, h, i, j, k)) return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MongeWitness> check_monge_adjacent(const CostMatrix& costs) {
  if (costs.has_infinity()) {
    throw InputError("infinite entries unsupported by the adjacent Monge check; use the full check");
  }
  for (int h = 0; h + 1 < costs.rows(); ++h) {
    for (int j = 0; j + 1 < costs.cols(); ++j) {
      if (auto w = violation(costs, h, h + 1, j, j + 1)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace mcfl
