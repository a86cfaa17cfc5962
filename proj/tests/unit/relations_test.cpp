#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "hyperrel/relations.hpp"

using hyperrel::BooleanRelation;
using hyperrel::EventuallyPeriodicSet;
using hyperrel::NodeSet;
using hyperrel::PowerTrace;

namespace {

BooleanRelation k2() { return BooleanRelation(2, {{0, 1}, {1, 0}}); }

BooleanRelation pende_i() { return BooleanRelation(5, {{2, 1}, {2, 4}, {1, 0}, {0, 3}, {3, 0}}); }

BooleanRelation complete(std::size_t n) {
  BooleanRelation r(n);
  for (hyperrel::Node i = 0; i < n; ++i) {
    for (hyperrel::Node j = 0; j < n; ++j) {
      if (i != j) r.insert(i, j);
    }
  }
  return r;
}

BooleanRelation random_relation(std::mt19937_64& rng, std::size_t n) {
  BooleanRelation r(n);
  for (hyperrel::Node i = 0; i < n; ++i) {
    for (hyperrel::Node j = 0; j < n; ++j) {
      if (rng() % 3 == 0) r.insert(i, j);
    }
  }
  return r;
}

}  // namespace

TEST(Relations, SquareOfK2IsIdentity) { EXPECT_EQ(power(k2(), 2), BooleanRelation::identity(2)); }

TEST(Relations, PowerZeroIsIdentity) { EXPECT_EQ(power(pende_i(), 0), BooleanRelation::identity(5)); }

TEST(Relations, PendeSquareReachesX1FromX3) { EXPECT_TRUE(power(pende_i(), 2).contains(2, 0)); }

TEST(Relations, ComposeAppliesRightFirst) {
  const BooleanRelation rho(3, {{0, 1}});
  const BooleanRelation sigma(3, {{1, 2}});
  EXPECT_TRUE(compose(sigma, rho).contains(0, 2));
  EXPECT_FALSE(compose(rho, sigma).contains(0, 2));
}

TEST(Relations, DomainRangeInverse) {
  const auto r = pende_i();
  EXPECT_EQ(r.domain(), (NodeSet{0, 1, 2, 3}));
  EXPECT_EQ(r.range(), (NodeSet{0, 1, 3, 4}));
  EXPECT_TRUE(r.inverse().contains(4, 2));
}

TEST(Relations, PendeDInfinity) {
  // x5 has no outgoing arc; the others reach the 2-cycle x1 x4.
  const auto m = oracle::to_matrix(pende_i());
  NodeSet expected;
  for (hyperrel::Node x = 0; x < 5; ++x) {
    if (oracle::in_d_infinity(m, x)) expected.insert(x);
  }
  EXPECT_EQ(expected, (NodeSet{0, 1, 2, 3}));
  EXPECT_EQ(d_infinity(pende_i()), expected);
}

TEST(Relations, PowerTraceOfK2) {
  const PowerTrace t(k2());
  EXPECT_EQ(t.preperiod(), 1U);
  EXPECT_EQ(t.period(), 2U);
  EXPECT_EQ(t.at(7), k2());
  EXPECT_EQ(t.at(8), BooleanRelation::identity(2));
}

TEST(Relations, PowerTraceMatchesWalkOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto r = random_relation(rng, n);
    const PowerTrace t(r);
    const auto m = oracle::to_matrix(r);
    for (std::size_t k = 1; k <= 12; ++k) {
      ASSERT_EQ(oracle::to_matrix(t.at(k)), oracle::walk_power(m, k)) << "k=" << k;
    }
  }
}

TEST(Relations, HitSetsOfK2) {
  const PowerTrace t(k2());
  EXPECT_EQ(hit_set(t, 0, NodeSet{1}), EventuallyPeriodicSet::progression(1, 2));
  EXPECT_EQ(hit_set(t, 0, NodeSet{0}), EventuallyPeriodicSet::progression(2, 2));
}

TEST(Relations, ReturnToSelfInCompleteGraph) {
  for (std::size_t n = 3; n <= 5; ++n) {
    EXPECT_EQ(hit_set(PowerTrace(complete(n)), 0, NodeSet{0}), EventuallyPeriodicSet::cofinite({1}));
  }
}

TEST(Relations, NoWalkFromX2ToX5) { EXPECT_TRUE(hit_set(PowerTrace(pende_i()), 1, NodeSet{4}).is_empty()); }

TEST(Relations, HitSetsMatchWalkOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto r = random_relation(rng, n);
    const PowerTrace t(r);
    const auto m = oracle::to_matrix(r);
    const std::uint64_t u = 1 + rng() % ((1U << n) - 1);
    const std::uint64_t v = 1 + rng() % ((1U << n) - 1);
    const auto got = hit_set(t, NodeSet::from_bits(u), NodeSet::from_bits(v));
    ASSERT_TRUE(oracle::agrees(got, oracle::hit_prefix(m, u, v, 40)));
  }
}

TEST(Relations, SequenceOfAlternatingRelations) {
  // ρ_n alternates between two relations; ρ_n is not a power here.
  hyperrel::RelationSequence seq;
  seq.cycle = {BooleanRelation(2, {{0, 1}}), BooleanRelation(2, {{0, 0}})};
  EXPECT_EQ(hit_set(seq, 0, NodeSet{1}), EventuallyPeriodicSet::progression(1, 2));
  EXPECT_EQ(seq.common_domain(), (NodeSet{0}));
  EXPECT_EQ(seq.at(4), seq.cycle[1]);
}

TEST(Relations, PowersOfSplitsAtPreperiod) {
  const auto seq = hyperrel::RelationSequence::powers_of(pende_i());
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(seq.at(k), power(pende_i(), k));
}
