#include <gtest/gtest.h>

#include <random>

#include "mcfl/errors.hpp"
#include "mcfl/oracle.hpp"
#include "test_support.hpp"

namespace mcfl {
namespace {

using testing::C;
using testing::kInf;

TEST(MinCostAssignment, Ref1) {
  const Instance inst = testing::ref1();
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{0}), Cost(8));
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{1}), Cost(9));
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{0, 1}), Cost(5));
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{}), Cost::infinity());
}

TEST(MinCostAssignment, AvoidsInfiniteEdges) {
  const Instance inst = testing::make_instance({{0, 5}, {0, 5}}, {2, 3}, {{C(1), kInf}, {C(9), C(1)}});
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{0, 1}), Cost(5));
  EXPECT_EQ(min_cost_assignment(inst, std::vector<int>{0}), Cost::infinity());
}

TEST(MinCostTransport, RespectsCapacities) {
  const std::vector<int64_t> caps{1, 10};
  const std::vector<int64_t> demands{3};
  const auto plan = min_cost_transport(caps, demands, testing::matrix({{C(0)}, {C(4)}}));
  ASSERT_TRUE(plan);
  EXPECT_EQ(plan->cost, 8);
  EXPECT_EQ(plan->units[0][0], 1);
  EXPECT_EQ(plan->units[1][0], 2);
}

TEST(MinCostTransport, NeedsCancellingPaths) {
  // The cheapest first unit must later be rerouted through a residual edge.
  const std::vector<int64_t> caps{1, 1};
  const std::vector<int64_t> demands{1, 1};
  const auto plan = min_cost_transport(caps, demands, testing::matrix({{C(1), C(2)}, {C(2), C(10)}}));
  ASSERT_TRUE(plan);
  EXPECT_EQ(plan->cost, 4);
}

TEST(MinCostTransport, DemandCap) {
  const std::vector<int64_t> caps{500};
  const std::vector<int64_t> demands{300};
  EXPECT_THROW(min_cost_transport(caps, demands, testing::matrix({{C(1)}})), LimitExceeded);
}

TEST(BruteForce, Ref1) {
  const OracleResult r = brute_force_optimum(testing::ref1());
  EXPECT_EQ(r.optimum, RationalCost(Rational(11)));
  EXPECT_EQ(r.best_open, std::vector<int>{0});
  EXPECT_EQ(r.best_flow.row_sum(0), Rational(5));
}

TEST(BruteForce, SmallCases) {
  EXPECT_EQ(brute_force_optimum(testing::make_instance({{5, 1}}, {1}, {{C(2)}})).optimum,
            RationalCost(Rational(7)));
  EXPECT_TRUE(brute_force_optimum(testing::make_instance({{5, 1}}, {2}, {{C(2)}})).optimum.is_infinite());
}

TEST(BruteForce, TieKeepsSmallestSubset) {
  const Instance inst = testing::make_instance({{0, 5}, {0, 5}}, {2}, {{C(1)}, {C(1)}});
  const OracleResult r = brute_force_optimum(inst);
  EXPECT_EQ(r.optimum, RationalCost(Rational(2)));
  EXPECT_EQ(r.best_open, std::vector<int>{0});
}

TEST(BruteForce, Caps) {
  Instance inst = testing::ref1();
  EXPECT_THROW(brute_force_optimum(inst, {.max_total_demand = 200, .max_facilities = 1}), LimitExceeded);
}

TEST(BruteForce, OptimumMatchesItsFlow) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::small_monge(rng, 4, 4, 6);
    const OracleResult r = brute_force_optimum(inst);
    if (r.optimum.is_infinite()) continue;
    RationalCost total = r.best_flow.cost;
    for (int i : r.best_open) total += RationalCost(Rational(inst.facilities[i].open_cost));
    EXPECT_EQ(total, r.optimum);
    for (int j = 0; j < inst.num_clients(); ++j) EXPECT_EQ(r.best_flow.column_sum(j), Rational(inst.clients[j].demand));
    for (int i = 0; i < inst.num_facilities(); ++i) {
      EXPECT_LE(r.best_flow.row_sum(i), Rational(inst.facilities[i].capacity));
    }
  }
}

TEST(BruteForce, MonotoneUnderCostDecreases) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testing::small_monge(rng, 4, 4, 6);
    const RationalCost before = brute_force_optimum(inst).optimum;
    const int i = trial % inst.num_facilities();
    inst.facilities[i].open_cost /= 2;
    const int j = trial % inst.num_clients();
    if (inst.costs(i, j).is_finite()) inst.costs(i, j) = Cost(inst.costs(i, j).value() / 2);
    EXPECT_LE(brute_force_optimum(inst).optimum, before);
  }
}

}  // namespace
}  // namespace mcfl
