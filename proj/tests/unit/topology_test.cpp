#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/topology.hpp"

using hyperrel::FiniteTopology;
using hyperrel::NodeSet;
using hyperrel::TopologyError;

TEST(Topology, CountsMatchPreorderOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(hyperrel::enumerate_topologies(n).size(), oracle::count_preorders(n)) << "n=" << n;
  }
}

TEST(Topology, TwoPointsByHand) { EXPECT_EQ(hyperrel::enumerate_topologies(2).size(), 4U); }

TEST(Topology, EnumerationGuard) { EXPECT_THROW(hyperrel::enumerate_topologies(5), hyperrel::GuardError); }

TEST(Topology, ValidatesExampleTopologies) {
  const auto t = FiniteTopology::validate(5, {NodeSet{}, NodeSet{1}, NodeSet{4}, NodeSet{1, 4}, NodeSet::full(5)});
  EXPECT_EQ(t.opens().size(), 5U);
  EXPECT_EQ(t.minimal_opens(), (std::vector<NodeSet>{NodeSet{1}, NodeSet{4}}));
  EXPECT_EQ(t.neighborhood(0), NodeSet::full(5));
  const auto u = FiniteTopology::validate(4, {NodeSet{}, NodeSet{1}, NodeSet{2}, NodeSet{1, 2}, NodeSet::full(4)});
  EXPECT_TRUE(u.is_open(NodeSet{1, 2}));
  EXPECT_FALSE(u.is_open(NodeSet{0}));
}

TEST(Topology, MinimalOpensArePairwiseDisjoint) {
  for (const auto& t : hyperrel::enumerate_topologies(4)) {
    const auto& m = t.minimal_opens();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) ASSERT_FALSE(m[i].intersects(m[j]));
    }
  }
}

TEST(Topology, NeighborhoodIsSmallestOpen) {
  for (const auto& t : hyperrel::enumerate_topologies(3)) {
    for (hyperrel::Node v = 0; v < 3; ++v) {
      const NodeSet nb = t.neighborhood(v);
      ASSERT_TRUE(t.is_open(nb));
      ASSERT_TRUE(nb.contains(v));
      for (NodeSet o : t.opens()) {
        if (o.contains(v)) ASSERT_TRUE(nb.is_subset_of(o));
      }
    }
  }
}

TEST(Topology, RejectsMissingFull) {
  try {
    FiniteTopology::validate(3, {NodeSet{}, NodeSet{0}});
    FAIL();
  } catch (const TopologyError& e) {
    EXPECT_EQ(e.kind(), TopologyError::Kind::MissingEmptyOrFull);
  }
}

TEST(Topology, RejectsUnionFailureWithWitness) {
  try {
    FiniteTopology::validate(3, {NodeSet{}, NodeSet{0}, NodeSet{1}, NodeSet::full(3)});
    FAIL();
  } catch (const TopologyError& e) {
    EXPECT_EQ(e.kind(), TopologyError::Kind::NotClosedUnderUnion);
    ASSERT_TRUE(e.witness().has_value());
  }
}

TEST(Topology, RejectsIntersectionFailure) {
  try {
    FiniteTopology::validate(3, {NodeSet{}, NodeSet{0, 1}, NodeSet{1, 2}, NodeSet::full(3)});
    FAIL();
  } catch (const TopologyError& e) {
    EXPECT_EQ(e.kind(), TopologyError::Kind::NotClosedUnderIntersection);
  }
}

TEST(Topology, DiscreteAndAntidiscrete) {
  EXPECT_TRUE(FiniteTopology::discrete(3).is_discrete());
  EXPECT_EQ(FiniteTopology::discrete(3).opens().size(), 8U);
  EXPECT_TRUE(FiniteTopology::antidiscrete(3).is_antidiscrete());
  EXPECT_THROW(FiniteTopology::discrete(21), hyperrel::GuardError);
}

TEST(Topology, GeneratedBy) {
  const auto t = FiniteTopology::generated_by(3, {NodeSet{0, 1}, NodeSet{1, 2}});
  EXPECT_TRUE(t.is_open(NodeSet{1}));
  EXPECT_EQ(t.opens().size(), 5U);
}

TEST(Topology, SamplingIsSeeded) {
  const auto a = hyperrel::sample_topologies(6, 20, 0);
  const auto b = hyperrel::sample_topologies(6, 20, 0);
  ASSERT_EQ(a.size(), 20U);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
}
