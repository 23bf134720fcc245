#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcfl/fptas.hpp"
#include "mcfl/instance.hpp"
#include "mcfl/monge.hpp"
#include "mcfl/solution.hpp"

namespace mcfl {

// Clients split into those released at the first facility (`first`) and the
// time-sensitive rest (`second`, releases nondecreasing in client order).
// Both lists hold 0-based client indices in increasing order.
struct ClientPartition {
  std::vector<int> first;
  std::vector<int> second;
};

// A client without a release date counts as released at the first facility.
ClientPartition partition_by_release(const Instance& inst);

// Throws InputError for a malformed partition and MongeViolationError when a
// class's cost columns are not Monge.
void validate_partition(const Instance& inst, const ClientPartition& partition);

// For clients whose release dates and deadlines are both nondecreasing:
// checks that exactly the out-of-window costs are infinite, that the Monge
// inequality holds on every all-finite quadruple, and that the whole matrix
// is Monge. Throws InputError for missing or non-monotone windows (those
// instances belong to the two-class solver) and for costs that contradict
// the windows.
std::optional<MongeWitness> check_windowed_monge(const Instance& inst);

struct BudgetVector {
  int64_t opening = 0;
  int64_t first = 0;
  int64_t second = 0;

  int64_t total() const { return opening + first + second; }
  friend bool operator==(const BudgetVector&, const BudgetVector&) = default;
};

struct DemandPair {
  Rational first;
  Rational second;

  Rational total() const { return first + second; }
  friend bool operator==(const DemandPair&, const DemandPair&) = default;
};

// Facility `facility` opens if the opening remainder covers f_i, then serves
// the residual of class `first` right to left with its class budget, then
// class `second` with whatever capacity is left.
DemandPair vector_demand_met(const Instance& inst, const ClientPartition& partition, int facility,
                             const DemandPair& met, const BudgetVector& remainder);

struct TwoClassResult {
  Solution solution;
  BudgetBound bound;
  BudgetGrid grid{1, 1};
  BudgetVector grid_budget;
};

// Budget-vector program over (opening, class-one, class-two) grid budgets.
// Demand vectors are compared by total demand met; ties keep the
// lexicographically smallest predecessor budget. The answer is the grid
// vector of least total meeting both class totals (lexicographically
// smallest among those).
TwoClassResult solve_two_class_fptas(const Instance& inst, const ClientPartition& partition,
                                     const Rational& epsilon);

}  // namespace mcfl
