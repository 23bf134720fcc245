#pragma once

#include <optional>

#include "mcfl/instance.hpp"

namespace mcfl {

// A quadruple h < i (facilities), j < k (clients) with
// c[h][j] + c[i][k] > c[h][k] + c[i][j]. Indices are 0-based.
struct MongeWitness {
  int h = 0;
  int i = 0;
  int j = 0;
  int k = 0;
  Cost lhs;
  Cost rhs;

  friend bool operator==(const MongeWitness&, const MongeWitness&) = default;
};

// Exhaustive O(m^2 n^2) check under extended arithmetic. Returns the
// lexicographically first (h, i, j, k) violation, or nullopt when Monge.
std::optional<MongeWitness> check_monge_full(const CostMatrix& costs);

// O(mn) check of adjacent 2x2 submatrices. Only valid for finite matrices;
// throws InputError when an entry is infinite. The returned witness is the
// first violating adjacent quadruple.
std::optional<MongeWitness> check_monge_adjacent(const CostMatrix& costs);

}  // namespace mcfl
