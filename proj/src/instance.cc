#include "mcfl/instance.hpp"

#include <algorithm>
#include <limits>

#include "mcfl/errors.hpp"

namespace mcfl {

CostMatrix::CostMatrix(int rows, int cols, Cost fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(std::max(rows, 0)) * std::max(cols, 0), fill) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<Cost>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  CostMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("cost matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    std::copy(rows[i].begin(), rows[i].end(), out.data_.begin() + static_cast<std::ptrdiff_t>(i) * n);
  }
  return out;
}

bool CostMatrix::has_infinity() const {
  return std::any_of(data_.begin(), data_.end(), [](const Cost& c) { return c.is_infinite(); });
}

CostMatrix CostMatrix::select_columns(std::span<const int> columns) const {
  CostMatrix out(rows_, static_cast<int>(columns.size()));
  for (int i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) out(i, static_cast<int>(k)) = (*this)(i, columns[k]);
  }
  return out;
}

int64_t Instance::total_demand() const {
  int64_t total = 0;
  for (const Client& c : clients) {
    if (__builtin_add_overflow(total, c.demand, &total)) throw std::overflow_error("total demand overflows int64");
  }
  return total;
}

int64_t Instance::total_capacity() const {
  int64_t total = 0;
  for (const Facility& f : facilities) {
    if (__builtin_add_overflow(total, f.capacity, &total)) return std::numeric_limits<int64_t>::max();
  }
  return total;
}

std::vector<int64_t> Instance::demands() const {
  std::vector<int64_t> out;
  out.reserve(clients.size());
  for (const Client& c : clients) out.push_back(c.demand);
  return out;
}

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const ValidationIssue& v) { return v.severity == ValidationIssue::Severity::kError; });
}

std::vector<std::string> ValidationReport::errors() const {
  std::vector<std::string> out;
  for (const auto& v : issues) {
    if (v.severity == ValidationIssue::Severity::kError) out.push_back(v.message);
  }
  return out;
}

std::vector<std::string> ValidationReport::warnings() const {
  std::vector<std::string> out;
  for (const auto& v : issues) {
    if (v.severity == ValidationIssue::Severity::kWarning) out.push_back(v.message);
  }
  return out;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto error = [&](std::string msg) {
    report.issues.push_back({ValidationIssue::Severity::kError, std::move(msg)});
  };
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  if (m < 1) error("at least one facility is required");
  if (n < 1) error("at least one client is required");
  if (inst.costs.rows() != m || inst.costs.cols() != n) {
    error("dimension mismatch: cost matrix is " + std::to_string(inst.costs.rows()) + "x" +
          std::to_string(inst.costs.cols()) + " but instance has " + std::to_string(m) + " facilities and " +
          std::to_string(n) + " clients");
  }
  for (int i = 0; i < m; ++i) {
    const Facility& f = inst.facilities[i];
    if (f.open_cost < 0) error("facility " + std::to_string(i + 1) + ": opening cost must be nonnegative");
    if (f.capacity < 1) error("facility " + std::to_string(i + 1) + ": capacity must be at least 1");
  }
  int64_t total = 0;
  bool overflow = false;
  for (int j = 0; j < n; ++j) {
    const Client& c = inst.clients[j];
    if (c.demand <= 0) error("client " + std::to_string(j + 1) + ": demand must be positive");
    if (c.demand > 0 && __builtin_add_overflow(total, c.demand, &total)) overflow = true;
    auto in_range = [m](int idx) { return idx >= 0 && idx < m; };
    if (c.release && !in_range(*c.release)) error("client " + std::to_string(j + 1) + ": release out of range");
    if (c.deadline && !in_range(*c.deadline)) error("client " + std::to_string(j + 1) + ": deadline out of range");
    if (c.release && c.deadline && *c.release > *c.deadline) {
      error("client " + std::to_string(j + 1) + ": release after deadline");
    }
  }
  if (overflow) error("total demand overflows int64");
  const bool shaped = inst.costs.rows() == m && inst.costs.cols() == n;
  if (shaped) {
    // Every finite objective value must stay representable: bound the sum of
    // all opening costs plus every finite edge carrying its whole column.
    int64_t worst = 0;
    bool cost_overflow = overflow;
    for (int i = 0; i < m && !cost_overflow; ++i) {
      if (inst.facilities[i].open_cost > 0 &&
          __builtin_add_overflow(worst, inst.facilities[i].open_cost, &worst)) {
        cost_overflow = true;
      }
      for (int j = 0; j < n && !cost_overflow; ++j) {
        const Cost& c = inst.costs(i, j);
        if (c.is_infinite()) continue;
        if (c.value() < 0) {
          error("cost (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be nonnegative");
          continue;
        }
        int64_t term = 0;
        if (inst.clients[j].demand > 0 &&
            (__builtin_mul_overflow(c.value(), inst.clients[j].demand, &term) ||
             __builtin_add_overflow(worst, term, &worst))) {
          cost_overflow = true;
        }
      }
    }
    if (cost_overflow && !overflow) error("cost magnitudes overflow int64");
  }
  if (m >= 1 && n >= 1 && !overflow && inst.total_capacity() < total) {
    report.issues.push_back({ValidationIssue::Severity::kWarning,
                             "total capacity " + std::to_string(inst.total_capacity()) + " is below total demand " +
                                 std::to_string(total) + "; the instance is infeasible"});
  }
  return report;
}

void require_valid(const Instance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.ok()) throw InputError("invalid instance: " + report.errors().front());
}

}  // namespace mcfl
