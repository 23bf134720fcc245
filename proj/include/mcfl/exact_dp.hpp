#pragma once

#include <cstdint>
#include <unordered_map>

#include "mcfl/instance.hpp"
#include "mcfl/kernel.hpp"
#include "mcfl/solution.hpp"

namespace mcfl {

struct ExactDpOptions {
  // The program enumerates every unit of demand; refuse larger instances.
  int64_t max_total_demand = 1'000'000;
};

// Dynamic program over states C(i, j, d): cheapest way to serve clients
// j.. (with only d units left at client j) using facilities i.. only. Each
// open facility serves a contiguous greedy block of the remaining demand.
// Exact for Monge costs. Evaluation is lazy and memoized per solver; the
// solver keeps a reference to `inst`, which must outlive it.
class ExactDp {
 public:
  explicit ExactDp(const Instance& inst, ExactDpOptions options = {});

  // C(facility, client, demand_at_client) with 0-based indices;
  // facility == m and client == n address the boundary states.
  Cost value(int facility, int client, int64_t demand_at_client);

  // Optimal solution, reconstructed by replaying the minimizing choices.
  // Infeasible instances give an infinite cost and an empty assignment.
  Solution solve();

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    Cost value;
    int64_t units = 0;  // 0: facility stays closed
  };

  // States are keyed by the demand still unserved, which determines (j, d).
  Entry evaluate(int facility, int64_t remaining);

  const Instance& inst_;
  DemandLine line_;
  std::unordered_map<uint64_t, Entry> memo_;
};

// Throws LimitExceeded when the total demand exceeds the configured cap.
Solution solve_exact(const Instance& inst, ExactDpOptions options = {});

}  // namespace mcfl
