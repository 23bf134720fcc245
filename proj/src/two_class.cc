#include "mcfl/two_class.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mcfl/errors.hpp"
#include "mcfl/kernel.hpp"

namespace mcfl {
namespace {

int release_of(const Client& c) { return c.release.value_or(0); }

// One client class seen as its own demand line.
struct ClassView {
  std::vector<int> members;
  DemandLine line;
  CostMatrix costs;

  ClassView(const Instance& inst, const std::vector<int>& clients)
      : members(clients), line(demands_of(inst, clients)), costs(inst.costs.select_columns(clients)) {}

  static std::vector<int64_t> demands_of(const Instance& inst, const std::vector<int>& clients) {
    std::vector<int64_t> out;
    for (int j : clients) out.push_back(inst.clients[j].demand);
    return out;
  }
};

DemandPair demand_met_pair(const Instance& inst, const ClassView& first, const ClassView& second, int facility,
                           const DemandPair& met, const BudgetVector& remainder) {
  const Facility& f = inst.facilities[facility];
  if (remainder.opening < f.open_cost) return {Rational(0), Rational(0)};
  Rational a = serve_from_right(first.costs.row(facility), first.line, met.first, Rational(remainder.first),
                                Rational(f.capacity));
  Rational b = serve_from_right(second.costs.row(facility), second.line, met.second, Rational(remainder.second),
                                Rational(f.capacity - a));
  return {std::move(a), std::move(b)};
}

using Index3 = std::array<int64_t, 3>;

class TwoClassTable {
 public:
  TwoClassTable(const Instance& inst, const ClassView& first, const ClassView& second, const BudgetGrid& grid)
      : inst_(inst), first_(first), second_(second), grid_(grid) {
    const int64_t g = grid.size();
    dims_ = {g, first.members.empty() ? 1 : g, second.members.empty() ? 1 : g};
    scalar_ = first.members.empty() || second.members.empty();
    layers_.resize(inst.num_facilities());
  }

  const Index3& dims() const { return dims_; }

  const DemandPair& value(int facility, const Index3& t) const {
    if (facility == inst_.num_facilities()) return zero_;
    return layers_[facility].at(key(t));
  }

  void compute(int facility, const Index3& t) {
    if (scalar_) {
      compute_scalar(facility, t);
      return;
    }
    std::optional<DemandPair> best;
    Index3 prev{};
    for (prev[0] = 0; prev[0] <= t[0]; ++prev[0]) {
      for (prev[1] = 0; prev[1] <= t[1]; ++prev[1]) {
        for (prev[2] = 0; prev[2] <= t[2]; ++prev[2]) {
          DemandPair v = candidate(facility, t, prev);
          if (!best || v.total() > best->total()) best = std::move(v);
        }
      }
    }
    layers_[facility].emplace(key(t), std::move(*best));
  }

  // With one class empty the demand vector is a scalar. The opening budget
  // only matters through the threshold f_i, values grow with the predecessor
  // budget and met + DM(met) grows with met, so the largest affordable opening
  // predecessor dominates every smaller one; without opening, prev = t does.
  void compute_scalar(int facility, const Index3& t) {
    DemandPair best = value(facility + 1, t);
    const int64_t open_steps = grid_.ceil_index(inst_.facilities[facility].open_cost);
    if (t[0] >= open_steps) {
      Index3 prev{t[0] - open_steps, 0, 0};
      for (prev[1] = 0; prev[1] <= t[1]; ++prev[1]) {
        for (prev[2] = 0; prev[2] <= t[2]; ++prev[2]) {
          DemandPair v = candidate(facility, t, prev);
          if (v.total() > best.total()) best = std::move(v);
        }
      }
    }
    layers_[facility].emplace(key(t), std::move(best));
  }

  DemandPair candidate(int facility, const Index3& t, const Index3& prev) const {
    const DemandPair& met = value(facility + 1, prev);
    const BudgetVector remainder{grid_.point(t[0] - prev[0]), grid_.point(t[1] - prev[1]),
                                 grid_.point(t[2] - prev[2])};
    DemandPair add = demand_met_pair(inst_, first_, second_, facility, met, remainder);
    return {met.first + add.first, met.second + add.second};
  }

  // Lexicographically smallest predecessor attaining value(facility, t).
  Index3 predecessor(int facility, const Index3& t) const {
    const Rational target = value(facility, t).total();
    Index3 prev{};
    for (prev[0] = 0; prev[0] <= t[0]; ++prev[0]) {
      for (prev[1] = 0; prev[1] <= t[1]; ++prev[1]) {
        for (prev[2] = 0; prev[2] <= t[2]; ++prev[2]) {
          if (candidate(facility, t, prev).total() == target) return prev;
        }
      }
    }
    throw std::logic_error("two-class table entry is not attained by any predecessor");
  }

 private:
  uint64_t key(const Index3& t) const {
    return static_cast<uint64_t>((t[0] * dims_[1] + t[1]) * dims_[2] + t[2]);
  }

  const Instance& inst_;
  const ClassView& first_;
  const ClassView& second_;
  BudgetGrid grid_;
  Index3 dims_{};
  bool scalar_ = false;
  std::vector<std::unordered_map<uint64_t, DemandPair>> layers_;
  DemandPair zero_{Rational(0), Rational(0)};
};

// Every index vector with t0 + t1 + t2 == sum inside dims, in lexicographic order.
std::vector<Index3> layer(const Index3& dims, int64_t sum) {
  std::vector<Index3> out;
  for (int64_t a = 0; a < dims[0] && a <= sum; ++a) {
    for (int64_t b = 0; b < dims[1] && a + b <= sum; ++b) {
      const int64_t c = sum - a - b;
      if (c < dims[2]) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace

ClientPartition partition_by_release(const Instance& inst) {
  ClientPartition p;
  for (int j = 0; j < inst.num_clients(); ++j) {
    (release_of(inst.clients[j]) == 0 ? p.first : p.second).push_back(j);
  }
  validate_partition(inst, p);
  return p;
}

void validate_partition(const Instance& inst, const ClientPartition& partition) {
  const int n = inst.num_clients();
  std::vector<int> seen(n, 0);
  for (const auto* part : {&partition.first, &partition.second}) {
    if (!std::is_sorted(part->begin(), part->end())) throw InputError("partition classes must be in client order");
    for (int j : *part) {
      if (j < 0 || j >= n) throw InputError("partition references an unknown client");
      if (seen[j]++) throw InputError("client " + std::to_string(j + 1) + " appears twice in the partition");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!seen[j]) throw InputError("client " + std::to_string(j + 1) + " is missing from the partition");
  }
  for (int j : partition.first) {
    if (release_of(inst.clients[j]) != 0) {
      throw InputError("client " + std::to_string(j + 1) + " in the first class is not released at facility 1");
    }
  }
  for (std::size_t k = 1; k < partition.second.size(); ++k) {
    if (release_of(inst.clients[partition.second[k - 1]]) > release_of(inst.clients[partition.second[k]])) {
      throw InputError("release dates in the second class must be nondecreasing");
    }
  }
  for (const auto* part : {&partition.first, &partition.second}) {
    if (auto w = check_monge_full(inst.costs.select_columns(*part))) {
      throw MongeViolationError("costs within a client class are not Monge");
    }
  }
}

std::optional<MongeWitness> check_windowed_monge(const Instance& inst) {
  require_valid(inst);
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  for (int j = 0; j < n; ++j) {
    if (!inst.clients[j].release || !inst.clients[j].deadline) {
      throw InputError("client " + std::to_string(j + 1) + " lacks a release date or deadline");
    }
  }
  for (int j = 1; j < n; ++j) {
    if (*inst.clients[j - 1].release > *inst.clients[j].release ||
        *inst.clients[j - 1].deadline > *inst.clients[j].deadline) {
      throw InputError("release dates and deadlines must be nondecreasing; use the two-class solver instead");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool outside = i < *inst.clients[j].release || i > *inst.clients[j].deadline;
      if (outside != inst.cost(i, j).is_infinite()) {
        throw InputError("cost (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") contradicts the client's window");
      }
    }
  }
  const CostMatrix& c = inst.costs;
  for (int h = 0; h < m; ++h) {
    for (int i = h + 1; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (c(h, j).is_infinite() || c(i, k).is_infinite() || c(h, k).is_infinite() || c(i, j).is_infinite()) {
            continue;
          }
          Cost lhs = c(h, j) + c(i, k);
          Cost rhs = c(h, k) + c(i, j);
          if (lhs > rhs) return MongeWitness{h, i, j, k, lhs, rhs};
        }
      }
    }
  }
  return check_monge_full(c);
}

DemandPair vector_demand_met(const Instance& inst, const ClientPartition& partition, int facility,
                             const DemandPair& met, const BudgetVector& remainder) {
  require_valid(inst);
  validate_partition(inst, partition);
  if (facility < 0 || facility >= inst.num_facilities()) throw InputError("facility index out of range");
  if (remainder.opening < 0 || remainder.first < 0 || remainder.second < 0) {
    throw InputError("budget remainders must be nonnegative");
  }
  const ClassView first(inst, partition.first);
  const ClassView second(inst, partition.second);
  if (met.first < 0 || met.second < 0 || met.first > first.line.total() || met.second > second.line.total()) {
    throw InputError("served demand out of range");
  }
  return demand_met_pair(inst, first, second, facility, met, remainder);
}

TwoClassResult solve_two_class_fptas(const Instance& inst, const ClientPartition& partition,
                                     const Rational& epsilon) {
  require_valid(inst);
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  validate_partition(inst, partition);
  const int m = inst.num_facilities();
  const ClassView first(inst, partition.first);
  const ClassView second(inst, partition.second);

  TwoClassResult out;
  out.bound = find_budget_bound(inst);
  out.grid = BudgetGrid::for_bound(out.bound.bound, epsilon, m);
  TwoClassTable table(inst, first, second, out.grid);
  const Index3& dims = table.dims();

  // Evaluate by increasing total budget: an entry only looks at
  // componentwise smaller budgets, so layers below the answer suffice.
  std::optional<Index3> answer;
  const int64_t max_sum = dims[0] + dims[1] + dims[2] - 3;
  for (int64_t sum = 0; sum <= max_sum && !answer; ++sum) {
    const std::vector<Index3> cells = layer(dims, sum);
    for (int i = m - 1; i >= 0; --i) {
      for (const Index3& t : cells) table.compute(i, t);
    }
    for (const Index3& t : cells) {
      const DemandPair& v = table.value(0, t);
      if (v.first >= first.line.total() && v.second >= second.line.total()) {
        answer = t;
        break;
      }
    }
  }
  if (!answer) throw std::logic_error("budget grid exhausted before meeting all demand");
  out.grid_budget = {out.grid.point((*answer)[0]), out.grid.point((*answer)[1]), out.grid.point((*answer)[2])};

  Solution sol;
  Index3 t = *answer;
  std::set<int> open;
  for (int i = 0; i < m; ++i) {
    const Index3 prev = table.predecessor(i, t);
    const DemandPair& before = table.value(i + 1, prev);
    const DemandPair after = table.candidate(i, t, prev);
    auto assign = [&](const ClassView& view, const Rational& lo, const Rational& hi) {
      for (int k = 0; k < view.line.size(); ++k) {
        Rational amount = view.line.overlap(k, lo, hi);
        if (amount > 0) {
          sol.assignment[{i, view.members[k]}] = amount / view.line.demand(k);
          open.insert(i);
        }
      }
    };
    assign(first, before.first, after.first);
    assign(second, before.second, after.second);
    t = prev;
  }
  sol.open.assign(open.begin(), open.end());
  sol.total_cost = evaluate_cost(inst, sol);
  if (!sol.feasible() || sol.total_cost.value() > out.grid_budget.total()) {
    throw std::logic_error("two-class reconstruction exceeds its grid budget");
  }
  out.solution = std::move(sol);
  return out;
}

}  // namespace mcfl
