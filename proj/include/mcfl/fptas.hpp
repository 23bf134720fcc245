#pragma once

#include <cstdint>
#include <vector>

#include "mcfl/instance.hpp"
#include "mcfl/rational.hpp"
#include "mcfl/solution.hpp"

namespace mcfl {

// Right-to-left sweep where every facility gets its own budget `limit` for
// opening plus transport. served[i] is the demand met by facilities i..m-1
// (served[m] == 0); feasible iff served[0] covers the total demand.
struct ContributionCheck {
  bool feasible = false;
  std::vector<Rational> served;
};

ContributionCheck max_contribution_feasible(const Instance& inst, int64_t limit);

// Upper end of the per-facility contribution search range:
// max_i (f_i + sum of c_ij d_j over finite c_ij), at least 1.
int64_t contribution_search_limit(const Instance& inst);

// min_contribution is the smallest integer limit that is feasible;
// bound = m * min_contribution satisfies z* <= bound <= m z*.
struct BudgetBound {
  int64_t min_contribution = 0;
  int64_t bound = 0;
};

// Binary search over [1, contribution_search_limit]. Throws InfeasibleError
// when even the upper end is infeasible.
BudgetBound find_budget_bound(const Instance& inst);

// Budgets restricted to multiples of a step K: {0, K, ..., (size-1) K}.
class BudgetGrid {
 public:
  BudgetGrid(int64_t step, int64_t size);

  // K = max(1, ceil(eps * bound / (m (m + 1)))), points up to
  // (ceil(bound / K) + m) K.
  static BudgetGrid for_bound(int64_t bound, const Rational& epsilon, int facilities);

  int64_t step() const { return step_; }
  int64_t size() const { return size_; }
  int64_t top() const { return (size_ - 1) * step_; }
  int64_t point(int64_t index) const { return index * step_; }

  // Index of the smallest grid point >= budget (may be >= size()).
  int64_t ceil_index(int64_t budget) const;
  int64_t floor_index(int64_t budget) const;

 private:
  int64_t step_;
  int64_t size_;
};

// rows[i][t]: demand that facilities i.. can meet, right to left, spending at
// most grid.point(t). rows[m] is identically zero.
struct ValueTable {
  BudgetGrid grid;
  std::vector<std::vector<Rational>> rows;

  const Rational& value(int facility, int64_t index) const { return rows[facility][index]; }
};

enum class TableMethod {
  // Upper-envelope evaluation, O(G log G log n) per facility.
  kEnvelope,
  // The recurrence taken literally: every predecessor budget, O(G^2 n).
  kDirect,
};

ValueTable build_value_table(const Instance& inst, const BudgetGrid& grid,
                             TableMethod method = TableMethod::kEnvelope);

// Smallest predecessor index s <= t whose choice attains rows[facility][t].
int64_t best_predecessor(const Instance& inst, const ValueTable& table, int facility, int64_t index);

struct FptasResult {
  Solution solution;
  BudgetBound bound;
  BudgetGrid grid{1, 1};
  int64_t grid_budget = 0;  // smallest grid budget meeting all demand
};

// (1 + epsilon)-approximation. The reported solution cost is recomputed from
// the reconstructed assignment and never exceeds grid_budget. Throws
// InfeasibleError for infeasible instances and InputError for epsilon <= 0.
FptasResult solve_fptas(const Instance& inst, const Rational& epsilon,
                        TableMethod method = TableMethod::kEnvelope);

// Unrounded value function over every integer budget 0..max_budget, for
// checking the grid at desk scale. rows[i][b] as in ValueTable.
std::vector<std::vector<Rational>> exact_value_table(const Instance& inst, int64_t max_budget);

// Single entry of exact_value_table(). Throws LimitExceeded above 20000.
Rational exact_value_function(const Instance& inst, int facility, int64_t budget);

}  // namespace mcfl
