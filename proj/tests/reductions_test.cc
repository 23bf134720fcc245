#include <gtest/gtest.h>

#include <random>

#include "mcfl/errors.hpp"
#include "mcfl/exact_dp.hpp"
#include "mcfl/generate.hpp"
#include "mcfl/monge.hpp"
#include "mcfl/reductions.hpp"
#include "test_support.hpp"

namespace mcfl {
namespace {

using testing::C;
using testing::kInf;

LotSizingInstance two_periods() {
  LotSizingInstance ls;
  ls.horizon = 2;
  ls.orders = {{1, 5}, {1, 5}};
  ls.demands = {{0, 0, 2}, {1, 0, 3}};
  ls.holding = {2};
  return ls;
}

TEST(CarryingCost, Sums) {
  const std::vector<int64_t> h{1, 4};
  EXPECT_EQ(carrying_cost(h, 0, 2), Cost(5));
  EXPECT_EQ(carrying_cost(h, 1, 1), Cost(0));
  EXPECT_EQ(carrying_cost(h, 2, 1), Cost::infinity());
}

TEST(LotSizing, TwoPeriods) {
  const Instance inst = lot_sizing_to_cfl(two_periods());
  EXPECT_EQ(inst.costs, testing::matrix({{C(0), C(2)}, {kInf, C(0)}}));
  EXPECT_EQ(inst.demands(), (std::vector<int64_t>{2, 3}));
  EXPECT_EQ(inst.facilities[1].open_cost, 1);
}

TEST(LotSizing, SinglePeriod) {
  LotSizingInstance ls;
  ls.orders = {{4, 3}};
  ls.demands = {{0, 0, 2}};
  EXPECT_EQ(lot_sizing_to_cfl(ls).costs, testing::matrix({{C(0)}}));
}

TEST(LotSizing, ThreePeriods) {
  LotSizingInstance ls;
  ls.horizon = 3;
  ls.orders = {{1, 5}, {1, 5}, {1, 5}};
  ls.demands = {{2, 0, 1}};
  ls.holding = {1, 4};
  const Instance inst = lot_sizing_to_cfl(ls);
  EXPECT_EQ(inst.costs(0, 0), Cost(5));
}

TEST(LotSizing, ZeroDemandAndZeroCapacityPeriodsDropped) {
  LotSizingInstance ls;
  ls.horizon = 3;
  ls.orders = {{1, 5}, {1, 0}, {1, 5}};
  ls.demands = {{0, 0, 2}, {1, 0, 0}, {2, 0, 4}};
  ls.holding = {1, 1};
  const Instance inst = lot_sizing_to_cfl(ls);
  EXPECT_EQ(inst.num_facilities(), 2);
  EXPECT_EQ(inst.num_clients(), 2);
  EXPECT_EQ(inst.costs, testing::matrix({{C(0), C(2)}, {kInf, C(0)}}));
}

TEST(LotSizing, BadInput) {
  LotSizingInstance ls = two_periods();
  ls.holding = {};
  EXPECT_THROW(lot_sizing_to_cfl(ls), InputError);
  ls = two_periods();
  ls.holding = {-1};
  EXPECT_THROW(lot_sizing_to_cfl(ls), InputError);
  ls = two_periods();
  ls.demands.push_back({1, 1, 2});
  EXPECT_THROW(lot_sizing_to_cfl(ls), InputError);
  ls = two_periods();
  ls.demands = {{0, 0, 0}};
  EXPECT_THROW(lot_sizing_to_cfl(ls), InputError);
}

TEST(MultiItem, IdenticalColumnsPerPeriod) {
  LotSizingInstance ls = two_periods();
  ls.demands = {{1, 2, 4}, {1, 1, 1}, {0, 1, 2}};
  const Instance inst = multi_item_to_cfl(ls);
  ASSERT_EQ(inst.num_clients(), 3);
  EXPECT_EQ(inst.demands(), (std::vector<int64_t>{2, 1, 4}));
  for (int i = 0; i < inst.num_facilities(); ++i) EXPECT_EQ(inst.costs(i, 1), inst.costs(i, 2));
  EXPECT_FALSE(check_monge_full(inst.costs));
}

TEST(MultiItem, SingleItemMatchesLotSizing) {
  EXPECT_EQ(multi_item_to_cfl(two_periods()).costs, lot_sizing_to_cfl(two_periods()).costs);
}

TEST(MultiItem, DifferingHoldingRejected) {
  LotSizingInstance ls = two_periods();
  ls.holding.clear();
  ls.item_holding = {{0, {2}}, {1, {3}}};
  ls.demands = {{0, 0, 1}, {1, 1, 1}};
  EXPECT_THROW(multi_item_to_cfl(ls), InputError);
  ls.item_holding = {{0, {2}}, {1, {2}}};
  EXPECT_EQ(multi_item_to_cfl(ls).costs, testing::matrix({{C(0), C(2)}, {kInf, C(0)}}));
}

TEST(SingleDemand, Embedding) {
  const Instance inst = single_demand_to_cfl({{1, 3}, {2, 3}, {3, 3}}, {7, std::nullopt, std::nullopt}, {C(1), kInf, C(0)});
  EXPECT_EQ(inst.num_facilities(), 3);
  EXPECT_EQ(inst.num_clients(), 1);
  EXPECT_FALSE(check_monge_full(inst.costs));
  EXPECT_THROW(single_demand_to_cfl({{1, 3}}, {7, std::nullopt, std::nullopt}, {}), InputError);
}

TEST(LotSizing, RandomReductionsAreMongeAndValuePreserving) {
  std::mt19937_64 rng(11);
  int solved = 0;
  for (int trial = 0; trial < 120; ++trial) {
    GeneratorOptions o;
    o.n = 1 + trial % 7;
    o.max_capacity = 12;
    const LotSizingInstance ls = random_lot_sizing(o, rng);
    Instance inst;
    try {
      inst = lot_sizing_to_cfl(ls);
    } catch (const InputError&) {
      continue;
    }
    ASSERT_FALSE(check_monge_full(inst.costs));
    const int64_t direct = testing::lot_sizing_brute_force(ls);
    const Solution sol = solve_exact(inst);
    if (direct < 0) {
      EXPECT_FALSE(sol.feasible());
    } else {
      EXPECT_EQ(sol.total_cost, RationalCost(Rational(direct))) << "trial " << trial;
      ++solved;
    }
  }
  EXPECT_GT(solved, 30);
}

}  // namespace
}  // namespace mcfl
