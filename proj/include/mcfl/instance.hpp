#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcfl/extended.hpp"

namespace mcfl {

struct Facility {
  int64_t open_cost = 0;
  int64_t capacity = 1;
};

// Release and deadline are 0-based facility indices; they are only read by
// the windowed extensions.
struct Client {
  int64_t demand = 1;
  std::optional<int> release;
  std::optional<int> deadline;
};

// Dense row-major matrix of per-unit costs, rows = facilities.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(int rows, int cols, Cost fill = Cost(0));

  // Throws InputError on ragged rows.
  static CostMatrix from_rows(const std::vector<std::vector<Cost>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Cost& operator()(int i, int j) const { return data_[index(i, j)]; }
  Cost& operator()(int i, int j) { return data_[index(i, j)]; }

  std::span<const Cost> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  bool has_infinity() const;

  // The submatrix keeping only the listed columns, in the given order.
  CostMatrix select_columns(std::span<const int> columns) const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cost> data_;
};

// A capacitated facility location instance. Facilities and clients are
// ordered; the cost matrix is indexed [facility][client]. Instances are plain
// values: construct freely, then validate_instance() before solving.
struct Instance {
  std::vector<Facility> facilities;
  std::vector<Client> clients;
  CostMatrix costs;

  int num_facilities() const { return static_cast<int>(facilities.size()); }
  int num_clients() const { return static_cast<int>(clients.size()); }
  const Cost& cost(int i, int j) const { return costs(i, j); }
  int64_t total_demand() const;
  int64_t total_capacity() const;
  std::vector<int64_t> demands() const;
};

struct ValidationIssue {
  enum class Severity { kError, kWarning };
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::vector<std::string> errors() const;
  std::vector<std::string> warnings() const;
};

// Reports every violated invariant. Capacity shortfall is only a warning;
// solvers report infeasibility on their own.
ValidationReport validate_instance(const Instance& inst);

// Throws InputError carrying the first error of validate_instance().
void require_valid(const Instance& inst);

}  // namespace mcfl
