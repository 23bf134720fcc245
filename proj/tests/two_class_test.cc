#include <gtest/gtest.h>

#include <random>

#include "mcfl/errors.hpp"
#include "mcfl/fptas.hpp"
#include "mcfl/oracle.hpp"
#include "mcfl/two_class.hpp"
#include "test_support.hpp"

namespace mcfl {
namespace {

using testing::C;
using testing::kInf;

Instance with_windows(Instance inst, std::vector<int> release, std::vector<int> deadline) {
  for (std::size_t j = 0; j < inst.clients.size(); ++j) {
    inst.clients[j].release = release[j];
    inst.clients[j].deadline = deadline[j];
  }
  return inst;
}

TEST(WindowedMonge, PatternMatchingWindowsPasses) {
  // Client 1 may use both facilities, client 2 only the second.
  const Instance inst =
      with_windows(testing::make_instance({{1, 5}, {1, 5}}, {1, 1}, {{C(1), kInf}, {C(2), C(1)}}), {0, 1}, {1, 1});
  EXPECT_FALSE(check_windowed_monge(inst));
}

TEST(WindowedMonge, LotSizingShapeWithFullWindows) {
  const Instance inst =
      with_windows(testing::make_instance({{1, 5}, {1, 5}}, {2, 3}, {{C(0), C(2)}, {C(3), C(0)}}), {0, 0}, {1, 1});
  EXPECT_FALSE(check_windowed_monge(inst));
}

TEST(WindowedMonge, NonMonotoneDeadlinesRejected) {
  const Instance inst =
      with_windows(testing::make_instance({{1, 5}, {1, 5}}, {1, 1}, {{C(1), C(2)}, {C(1), kInf}}), {0, 0}, {1, 0});
  EXPECT_THROW(check_windowed_monge(inst), InputError);
}

TEST(WindowedMonge, MissingWindowsRejected) { EXPECT_THROW(check_windowed_monge(testing::ref1()), InputError); }

TEST(WindowedMonge, CostsContradictingWindowsRejected) {
  const Instance inst =
      with_windows(testing::make_instance({{1, 5}, {1, 5}}, {1, 1}, {{C(1), C(2)}, {C(2), C(1)}}), {0, 1}, {1, 1});
  EXPECT_THROW(check_windowed_monge(inst), InputError);
}

TEST(WindowedMonge, FiniteViolationReported) {
  const Instance inst =
      with_windows(testing::make_instance({{1, 5}, {1, 5}}, {1, 1}, {{C(2), C(1)}, {C(1), C(2)}}), {0, 0}, {1, 1});
  EXPECT_TRUE(check_windowed_monge(inst));
}

TEST(WindowedMonge, GeneratedInstancesPass) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    ASSERT_FALSE(check_windowed_monge(testing::small_windowed(rng, 6, 6, 5))) << "trial " << trial;
  }
}

TEST(Partition, ByRelease) {
  Instance inst = testing::ref1();
  inst.clients[1].release = 1;
  const ClientPartition p = partition_by_release(inst);
  EXPECT_EQ(p.first, std::vector<int>{0});
  EXPECT_EQ(p.second, std::vector<int>{1});
  EXPECT_NO_THROW(validate_partition(inst, p));
}

TEST(Partition, Malformed) {
  const Instance inst = testing::ref1();
  EXPECT_THROW(validate_partition(inst, {{0}, {}}), InputError);
  EXPECT_THROW(validate_partition(inst, {{0, 1}, {1}}), InputError);
  EXPECT_THROW(validate_partition(inst, {{1, 0}, {}}), InputError);
  EXPECT_THROW(validate_partition(inst, {{0, 1, 2}, {}}), InputError);
  Instance late = inst;
  late.clients[0].release = 1;
  EXPECT_THROW(validate_partition(late, {{0, 1}, {}}), InputError);
}

TEST(Partition, NonMongeClassRejected) {
  const Instance inst = testing::make_instance({{1, 5}, {1, 5}}, {1, 1}, {{C(2), C(1)}, {C(1), C(2)}});
  EXPECT_THROW(validate_partition(inst, {{0, 1}, {}}), MongeViolationError);
  EXPECT_NO_THROW(validate_partition(inst, {{0}, {1}}));
}

TEST(VectorDemandMet, Ref1) {
  const Instance inst = testing::ref1();
  const ClientPartition p{{0}, {1}};
  const DemandPair zero{Rational(0), Rational(0)};
  EXPECT_EQ(vector_demand_met(inst, p, 0, zero, {9, 2, 6}), (DemandPair{Rational(2), Rational(3)}));
  EXPECT_EQ(vector_demand_met(inst, p, 1, zero, {9, 100, 100}), zero);
  // Shared capacity: the first class takes precedence.
  EXPECT_EQ(vector_demand_met(inst, p, 0, zero, {3, 2, 3}), (DemandPair{Rational(2), Rational(3, 2)}));
}

TEST(VectorDemandMet, EmptySecondClassMatchesScalar) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::small_monge(rng, 4, 4, 6);
    std::vector<int> all(inst.num_clients());
    for (int j = 0; j < inst.num_clients(); ++j) all[j] = j;
    const ClientPartition p{all, {}};
    const int i = trial % inst.num_facilities();
    const Rational met(trial % (inst.total_demand() + 1));
    const int64_t budget = trial % 40;
    const int64_t open = std::min<int64_t>(inst.facilities[i].open_cost, budget);
    const DemandPair v = vector_demand_met(inst, p, i, {met, Rational(0)}, {open, budget - open, 0});
    EXPECT_EQ(v.first, demand_met(inst, i, met, budget)) << "trial " << trial;
    EXPECT_EQ(v.second, Rational(0));
  }
}

TEST(VectorDemandMet, NeverExceedsCapacity) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::small_windowed(rng, 4, 4, 8);
    const ClientPartition p = partition_by_release(inst);
    const int i = trial % inst.num_facilities();
    const DemandPair v = vector_demand_met(inst, p, i, {Rational(0), Rational(0)}, {100, 100, 100});
    EXPECT_LE(v.total(), Rational(inst.facilities[i].capacity));
  }
}

TEST(TwoClass, Ref1SplitPartition) {
  const TwoClassResult r = solve_two_class_fptas(testing::ref1(), {{0}, {1}}, Rational(1, 10));
  EXPECT_EQ(r.grid.step(), 1);
  EXPECT_EQ(r.solution.total_cost, RationalCost(Rational(11)));
}

TEST(TwoClass, EmptySecondClassMatchesScalarFptasOnUnitGrid) {
  std::mt19937_64 rng(19);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::small_monge(rng, 3, 3, 6);
    if (brute_force_optimum(inst).optimum.is_infinite()) continue;
    std::vector<int> all(inst.num_clients());
    for (int j = 0; j < inst.num_clients(); ++j) all[j] = j;
    const TwoClassResult two = solve_two_class_fptas(inst, {all, {}}, Rational(1, 100));
    const FptasResult one = solve_fptas(inst, Rational(1, 100));
    ASSERT_EQ(one.grid.step(), 1);
    EXPECT_EQ(two.grid_budget.total(), one.grid_budget) << "trial " << trial;
    EXPECT_EQ(two.solution.total_cost, one.solution.total_cost) << "trial " << trial;
    ++compared;
  }
  EXPECT_GT(compared, 20);
}

// With K > 1 the opening and transport budgets round separately, so the two
// programs may land on different solutions; both keep the guarantee.
TEST(TwoClass, EmptySecondClassOnCoarseGridKeepsGuarantee) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::small_monge(rng, 3, 3, 6);
    const RationalCost opt = brute_force_optimum(inst).optimum;
    if (opt.is_infinite()) continue;
    std::vector<int> all(inst.num_clients());
    for (int j = 0; j < inst.num_clients(); ++j) all[j] = j;
    const TwoClassResult two = solve_two_class_fptas(inst, {all, {}}, Rational(1, 2));
    EXPECT_LE(two.solution.total_cost.value(), Rational(3, 2) * opt.value()) << "trial " << trial;
  }
}

TEST(TwoClass, TwoNonEmptyClassesWithinGuarantee) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::small_monge(rng, 3, 4, 4);
    if (inst.num_clients() < 2) continue;
    const RationalCost opt = brute_force_optimum(inst).optimum;
    if (opt.is_infinite()) continue;
    std::vector<int> first, second;
    for (int j = 0; j < inst.num_clients(); ++j) (j % 2 ? second : first).push_back(j);
    const TwoClassResult r = solve_two_class_fptas(inst, {first, second}, Rational(1));
    ASSERT_TRUE(check_solution(inst, r.solution).empty());
    EXPECT_LE(r.solution.total_cost.value(), 2 * opt.value()) << "trial " << trial;
    EXPECT_LE(r.solution.total_cost.value(), Rational(r.grid_budget.total()));
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(TwoClass, WindowedApproximation) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testing::small_windowed(rng, 3, 3, 5);
    const RationalCost opt = brute_force_optimum(inst).optimum;
    if (opt.is_infinite()) {
      EXPECT_THROW(solve_two_class_fptas(inst, partition_by_release(inst), Rational(1)), InfeasibleError);
      continue;
    }
    const TwoClassResult r = solve_two_class_fptas(inst, partition_by_release(inst), Rational(1));
    ASSERT_TRUE(check_solution(inst, r.solution).empty());
    EXPECT_LE(r.solution.total_cost.value(), 2 * opt.value()) << "trial " << trial;
  }
}

}  // namespace
}  // namespace mcfl
