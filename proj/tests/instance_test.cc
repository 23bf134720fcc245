#include <gtest/gtest.h>

#include <random>

#include "mcfl/errors.hpp"
#include "mcfl/generate.hpp"
#include "mcfl/instance.hpp"
#include "mcfl/monge.hpp"
#include "test_support.hpp"

namespace mcfl {
namespace {

using testing::C;
using testing::kInf;

bool has_error(const ValidationReport& r, const std::string& needle) {
  for (const std::string& e : r.errors()) {
    if (e.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(Validate, Ref1IsValid) {
  const ValidationReport r = validate_instance(testing::ref1());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.issues.empty());
}

TEST(Validate, ZeroDemand) {
  Instance inst = testing::ref1();
  inst.clients[1].demand = 0;
  EXPECT_TRUE(has_error(validate_instance(inst), "demand must be positive"));
  EXPECT_THROW(require_valid(inst), InputError);
}

TEST(Validate, DimensionMismatch) {
  Instance inst = testing::ref1();
  inst.costs = testing::matrix({{C(1), C(2), C(3)}, {C(3), C(1), C(0)}});
  EXPECT_TRUE(has_error(validate_instance(inst), "dimension mismatch"));
}

TEST(Validate, NegativeValues) {
  Instance inst = testing::ref1();
  inst.costs(0, 0) = Cost(-1);
  EXPECT_FALSE(validate_instance(inst).ok());
  inst = testing::ref1();
  inst.facilities[0].open_cost = -1;
  EXPECT_FALSE(validate_instance(inst).ok());
  inst = testing::ref1();
  inst.facilities[0].capacity = 0;
  EXPECT_FALSE(validate_instance(inst).ok());
}

TEST(Validate, CapacityShortfallIsOnlyAWarning) {
  Instance inst = testing::ref1();
  inst.facilities[0].capacity = 1;
  inst.facilities[1].capacity = 1;
  const ValidationReport r = validate_instance(inst);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.warnings().size(), 1u);
}

TEST(Validate, WindowOrder) {
  Instance inst = testing::ref1();
  inst.clients[0].release = 1;
  inst.clients[0].deadline = 0;
  EXPECT_FALSE(validate_instance(inst).ok());
}

TEST(Validate, EmptyInstance) { EXPECT_FALSE(validate_instance(Instance{}).ok()); }

TEST(CostMatrix, RaggedRowsRejected) {
  EXPECT_THROW(CostMatrix::from_rows({{C(1), C(2)}, {C(1)}}), InputError);
}

TEST(MongeFull, Ref1Passes) { EXPECT_FALSE(check_monge_full(testing::ref1().costs)); }

TEST(MongeFull, ReportsWitness) {
  const auto w = check_monge_full(testing::matrix({{C(2), C(1)}, {C(1), C(2)}}));
  ASSERT_TRUE(w);
  EXPECT_EQ((std::array{w->h, w->i, w->j, w->k}), (std::array{0, 1, 0, 1}));
  EXPECT_EQ(w->lhs, Cost(4));
  EXPECT_EQ(w->rhs, Cost(2));
}

TEST(MongeFull, InfinityOnTheRightPasses) {
  EXPECT_FALSE(check_monge_full(testing::matrix({{C(0), C(2)}, {kInf, C(0)}})));
}

TEST(MongeFull, InfinityOnTheLeftFails) {
  EXPECT_TRUE(check_monge_full(testing::matrix({{kInf, C(2)}, {C(0), C(0)}})));
  EXPECT_FALSE(check_monge_full(testing::matrix({{kInf, kInf}, {kInf, C(0)}})));
}

TEST(MongeFull, WitnessIsLexicographicallyFirst) {
  // Violations at (1,2,1,2) and (1,2,2,3) (1-based); the first one wins.
  const auto w = check_monge_full(testing::matrix({{C(5), C(0), C(5)}, {C(0), C(5), C(0)}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->j, 0);
  EXPECT_EQ(w->k, 1);
}

TEST(MongeAdjacent, Examples) {
  EXPECT_FALSE(check_monge_adjacent(testing::ref1().costs));
  EXPECT_TRUE(check_monge_adjacent(testing::matrix({{C(2), C(1)}, {C(1), C(2)}})));
  try {
    check_monge_adjacent(testing::matrix({{C(0), C(2)}, {kInf, C(0)}}));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("infinite entries unsupported"), std::string::npos);
  }
}

TEST(MongeProperty, AdjacentAgreesWithFullOnFiniteMatrices) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int64_t> entry(0, 20);
  int monge = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    CostMatrix m(5, 5);
    if (trial % 3 == 0) {
      m = random_monge_matrix(5, 5, 20, rng);
    } else {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) m(i, j) = Cost(entry(rng));
      }
    }
    const auto full = check_monge_full(m);
    const auto adjacent = check_monge_adjacent(m);
    ASSERT_EQ(full.has_value(), adjacent.has_value()) << "trial " << trial;
    if (!full) ++monge;
  }
  EXPECT_GE(monge, 500);
}

TEST(MongeProperty, GeneratedMatricesAreMonge) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 7;
    const int n = 1 + (trial / 7) % 7;
    const CostMatrix c = random_monge_matrix(m, n, 10 + trial % 50, rng);
    ASSERT_FALSE(check_monge_full(c));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) ASSERT_LE(c(i, j), Cost(10 + trial % 50));
    }
  }
}

}  // namespace
}  // namespace mcfl
