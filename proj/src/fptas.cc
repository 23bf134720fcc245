#include "mcfl/fptas.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "mcfl/errors.hpp"
#include "mcfl/kernel.hpp"

namespace mcfl {
namespace {

constexpr int64_t kExactValueLimit = 20000;

// Cost of serving facility i's demand line from the right, as a piecewise
// linear function of the position. Infinite-cost clients get slope zero
// here; barrier() keeps service from crossing them.
class ServiceProfile {
 public:
  ServiceProfile(const Instance& inst, const DemandLine& line, int facility) {
    const int n = line.size();
    position_.reserve(n + 1);
    cumulative_.reserve(n + 1);
    slope_.reserve(n);
    position_.push_back(0);
    cumulative_.push_back(0);
    for (int k = 0; k < n; ++k) {
      const int j = n - 1 - k;
      const Cost& c = inst.cost(facility, j);
      const int64_t rate = c.is_infinite() ? 0 : c.value();
      if (c.is_infinite()) blocked_.push_back(k);
      slope_.push_back(rate);
      position_.push_back(line.suffix(j));
      cumulative_.push_back(cumulative_.back() + rate * line.demand(j));
    }
  }

  int64_t total() const { return position_.back(); }

  Rational cost_at(const Rational& y) const {
    if (y >= total()) return Rational(cumulative_.back());
    const int k = segment(y);
    return cumulative_[k] + slope_[k] * (y - position_[k]);
  }

  // sup { y in [0, total] : cost_at(y) <= v }
  Rational reach(const Rational& v) const {
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), v,
                               [](const Rational& a, int64_t b) { return a < b; });
    const int k = static_cast<int>(std::distance(cumulative_.begin(), it)) - 1;
    if (k + 1 == static_cast<int>(cumulative_.size())) return Rational(total());
    return position_[k] + (v - cumulative_[k]) / slope_[k];
  }

  // First position >= y where an infinite-cost client still has demand.
  Rational barrier(const Rational& y) const {
    for (int k : blocked_) {
      if (position_[k + 1] > y) return max(y, Rational(position_[k]));
    }
    return Rational(total());
  }

 private:
  // Segment k with position_[k] <= y < position_[k+1].
  int segment(const Rational& y) const {
    auto it = std::upper_bound(position_.begin(), position_.end(), y,
                               [](const Rational& a, int64_t b) { return a < b; });
    return static_cast<int>(std::distance(position_.begin(), it)) - 1;
  }

  std::vector<int64_t> position_;
  std::vector<int64_t> cumulative_;
  std::vector<int64_t> slope_;
  std::vector<int> blocked_;
};

// For a predecessor s, `served(s) + DM(served(s), (t - s) K)` equals
// min(reach(offset + tK - f), cap) with offset = cost_at(served(s)) - sK and
// cap = min(served(s) + U, barrier(served(s))). Candidates with a larger
// index have a larger cap, so an older candidate whose offset is not larger
// is dominated. The survivors have strictly decreasing offsets and
// nondecreasing caps, so the best one sits where reach drops below cap.
void fill_row_envelope(const Instance& inst, const DemandLine& line, int facility, const BudgetGrid& grid,
                       const std::vector<Rational>& next, std::vector<Rational>& row) {
  const ServiceProfile profile(inst, line, facility);
  const Facility& f = inst.facilities[facility];
  const int64_t step = grid.step();
  const int64_t shift = (f.open_cost + step - 1) / step;  // t - s >= shift  <=>  (t - s) K >= f

  struct Candidate {
    Rational offset;
    Rational cap;
  };
  std::vector<Candidate> hull;
  int64_t added = 0;
  for (int64_t t = 0; t < grid.size(); ++t) {
    while (added <= t - shift) {
      const Rational& met = next[added];
      Candidate c{profile.cost_at(met) - Rational(added * step),
                  min(Rational(met + f.capacity), profile.barrier(met))};
      while (!hull.empty() && hull.back().offset <= c.offset) hull.pop_back();
      hull.push_back(std::move(c));
      ++added;
    }
    Rational best = next[t];
    if (!hull.empty()) {
      const Rational spend = Rational(t * step - f.open_cost);
      auto reach_of = [&](std::size_t k) { return profile.reach(hull[k].offset + spend); };
      std::size_t lo = 0;
      std::size_t hi = hull.size();
      std::optional<Rational> reach_at_lo;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        Rational r = reach_of(mid);
        if (r <= hull[mid].cap) {
          hi = mid;
          reach_at_lo = std::move(r);
        } else {
          lo = mid + 1;
        }
      }
      // The loop only moves hi onto indices where the test held, so lo is
      // the last such index and reach_at_lo its reach.
      if (lo < hull.size()) best = max(best, *reach_at_lo);
      if (lo > 0) best = max(best, hull[lo - 1].cap);
    }
    row[t] = std::move(best);
  }
}

void fill_row_direct(const Instance& inst, const DemandLine& line, int facility, const BudgetGrid& grid,
                     const std::vector<Rational>& next, std::vector<Rational>& row) {
  for (int64_t t = 0; t < grid.size(); ++t) {
    Rational best = -1;
    for (int64_t s = 0; s <= t; ++s) {
      Rational v = next[s] + demand_met(inst, line, facility, next[s], grid.point(t - s));
      if (v > best) best = std::move(v);
    }
    row[t] = std::move(best);
  }
}

}  // namespace

ContributionCheck max_contribution_feasible(const Instance& inst, int64_t limit) {
  require_valid(inst);
  if (limit < 0) throw InputError("contribution limit must be nonnegative");
  const int m = inst.num_facilities();
  const DemandLine line(inst.demands());
  ContributionCheck out;
  out.served.assign(m + 1, Rational(0));
  for (int i = m - 1; i >= 0; --i) {
    out.served[i] = out.served[i + 1] + demand_met(inst, line, i, out.served[i + 1], limit);
  }
  out.feasible = out.served[0] >= line.total();
  return out;
}

int64_t contribution_search_limit(const Instance& inst) {
  int64_t best = 1;
  for (int i = 0; i < inst.num_facilities(); ++i) {
    Cost total(inst.facilities[i].open_cost);
    for (int j = 0; j < inst.num_clients(); ++j) {
      if (inst.cost(i, j).is_finite()) total += scaled(inst.cost(i, j), inst.clients[j].demand);
    }
    best = std::max(best, total.value());
  }
  return best;
}

BudgetBound find_budget_bound(const Instance& inst) {
  require_valid(inst);
  int64_t hi = contribution_search_limit(inst);
  if (!max_contribution_feasible(inst, hi).feasible) throw InfeasibleError("no feasible solution");
  int64_t lo = 1;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (max_contribution_feasible(inst, mid).feasible) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  BudgetBound out;
  out.min_contribution = lo;
  if (__builtin_mul_overflow(lo, static_cast<int64_t>(inst.num_facilities()), &out.bound)) {
    throw std::overflow_error("budget bound overflows int64");
  }
  return out;
}

BudgetGrid::BudgetGrid(int64_t step, int64_t size) : step_(step), size_(size) {
  if (step < 1 || size < 1) throw InputError("budget grid needs a positive step and at least one point");
}

BudgetGrid BudgetGrid::for_bound(int64_t bound, const Rational& epsilon, int facilities) {
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  if (bound < 0 || facilities < 1) throw InputError("invalid budget bound or facility count");
  const Rational raw = epsilon * bound / (static_cast<int64_t>(facilities) * (facilities + 1));
  const int64_t step = std::max<int64_t>(1, ceil_to_int(raw));
  const int64_t size = (bound + step - 1) / step + facilities + 1;
  return BudgetGrid(step, size);
}

int64_t BudgetGrid::ceil_index(int64_t budget) const {
  if (budget <= 0) return 0;
  return (budget + step_ - 1) / step_;
}

int64_t BudgetGrid::floor_index(int64_t budget) const {
  if (budget < 0) throw InputError("negative budget");
  return budget / step_;
}

ValueTable build_value_table(const Instance& inst, const BudgetGrid& grid, TableMethod method) {
  require_valid(inst);
  const int m = inst.num_facilities();
  const DemandLine line(inst.demands());
  ValueTable table{grid, std::vector<std::vector<Rational>>(m + 1, std::vector<Rational>(grid.size()))};
  for (int i = m - 1; i >= 0; --i) {
    if (method == TableMethod::kEnvelope) {
      fill_row_envelope(inst, line, i, grid, table.rows[i + 1], table.rows[i]);
    } else {
      fill_row_direct(inst, line, i, grid, table.rows[i + 1], table.rows[i]);
    }
  }
  return table;
}

int64_t best_predecessor(const Instance& inst, const ValueTable& table, int facility, int64_t index) {
  const DemandLine line(inst.demands());
  const auto& next = table.rows[facility + 1];
  const Rational& target = table.rows[facility][index];
  for (int64_t s = 0; s <= index; ++s) {
    if (next[s] + demand_met(inst, line, facility, next[s], table.grid.point(index - s)) == target) return s;
  }
  throw std::logic_error("value table entry is not attained by any predecessor");
}

FptasResult solve_fptas(const Instance& inst, const Rational& epsilon, TableMethod method) {
  require_valid(inst);
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  FptasResult out;
  out.bound = find_budget_bound(inst);
  const int m = inst.num_facilities();
  out.grid = BudgetGrid::for_bound(out.bound.bound, epsilon, m);
  const ValueTable table = build_value_table(inst, out.grid, method);
  const DemandLine line(inst.demands());

  const auto& top = table.rows[0];
  auto it = std::find_if(top.begin(), top.end(), [&](const Rational& v) { return v >= line.total(); });
  if (it == top.end()) throw std::logic_error("budget grid exhausted before meeting all demand");
  int64_t t = std::distance(top.begin(), it);
  out.grid_budget = out.grid.point(t);

  std::vector<std::optional<std::pair<Rational, Rational>>> served(m);
  for (int i = 0; i < m; ++i) {
    const int64_t s = best_predecessor(inst, table, i, t);
    const Rational& before = table.rows[i + 1][s];
    const Rational& after = table.rows[i][t];
    if (before < after) served[i] = std::make_pair(before, after);
    t = s;
  }
  out.solution = solution_from_intervals(inst, line, served);
  if (!out.solution.feasible() || out.solution.total_cost.value() > out.grid_budget) {
    throw std::logic_error("FPTAS reconstruction exceeds its grid budget");
  }
  return out;
}

std::vector<std::vector<Rational>> exact_value_table(const Instance& inst, int64_t max_budget) {
  require_valid(inst);
  if (max_budget < 0) throw InputError("negative budget");
  if (max_budget > kExactValueLimit) {
    throw LimitExceeded("exact value function limited to budgets <= " + std::to_string(kExactValueLimit));
  }
  const int m = inst.num_facilities();
  const DemandLine line(inst.demands());
  std::vector<std::vector<Rational>> rows(m + 1, std::vector<Rational>(max_budget + 1, Rational(0)));
  for (int i = m - 1; i >= 0; --i) {
    for (int64_t b = 0; b <= max_budget; ++b) {
      Rational best = 0;
      for (int64_t prev = 0; prev <= b; ++prev) {
        const Rational& met = rows[i + 1][prev];
        best = max(best, met + demand_met(inst, line, i, met, b - prev));
      }
      rows[i][b] = best;
    }
  }
  return rows;
}

Rational exact_value_function(const Instance& inst, int facility, int64_t budget) {
  if (facility < 0 || facility > inst.num_facilities()) throw InputError("facility index out of range");
  return exact_value_table(inst, budget)[facility][budget];
}

}  // namespace mcfl
