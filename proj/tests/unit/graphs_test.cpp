#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/graphs.hpp"

using namespace hyperrel;

namespace {

std::size_t oracle_s_index(const SimpleGraph& g) {
  const auto m = oracle::to_matrix(g.relation());
  const std::size_t n = g.n();
  std::set<std::vector<bool>> distinct;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) distinct.insert(oracle::hit_prefix(m, u, v, 4 * n + 4));
  }
  return distinct.size();
}

}  // namespace

TEST(Graphs, K2Sets) {
  const auto s = s_collection(SimpleGraph::complete(2).relation());
  const std::set<EventuallyPeriodicSet> got(s.sets.begin(), s.sets.end());
  EXPECT_TRUE(got.count(EventuallyPeriodicSet::progression(2, 2)));
  EXPECT_TRUE(got.count(EventuallyPeriodicSet::progression(1, 2)));
  EXPECT_EQ(s.count(), 3U);
}

TEST(Graphs, Basics) {
  const auto c4 = SimpleGraph::cycle(4);
  EXPECT_EQ(c4.edge_count(), 4U);
  EXPECT_TRUE(is_bipartite(c4));
  EXPECT_FALSE(is_bipartite(SimpleGraph::cycle(5)));
  EXPECT_EQ(diameter(SimpleGraph::path(6)), 5U);
  EXPECT_EQ(diameter(SimpleGraph(2)), kInfinite);
  EXPECT_THROW(SimpleGraph(3).add_edge(1, 1), InvalidArgument);
}

TEST(Graphs, MoguceOnFourCycle) {
  const auto r = verify_moguce(SimpleGraph::cycle(4));
  EXPECT_TRUE(r.bipartite);
  EXPECT_EQ(r.pairs_checked, 225U);
  EXPECT_EQ(r.equality_violations, 0U);
}

TEST(Graphs, MoguceInclusionOnTriangle) {
  const auto r = verify_moguce(SimpleGraph::complete(3));
  EXPECT_FALSE(r.bipartite);
  EXPECT_EQ(r.inclusion_violations, 0U);
  EXPECT_THROW(verify_moguce(SimpleGraph(3)), PreconditionError);
}

TEST(Graphs, LSet) {
  const auto p3 = SimpleGraph::path(3);
  EXPECT_EQ(l_set(p3, NodeSet{0}, NodeSet{0}), EventuallyPeriodicSet::progression(2, 2));
  EXPECT_EQ(l_set(p3, NodeSet{0}, NodeSet{1, 2}), EventuallyPeriodicSet::naturals());
}

TEST(Graphs, SIndexMatchesOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& g : graph_classes(n)) EXPECT_EQ(s_index(g), oracle_s_index(g));
  }
}

TEST(Graphs, PathFour) {
  EXPECT_EQ(s_index(SimpleGraph::path(4)), oracle_s_index(SimpleGraph::path(4)));
  EXPECT_EQ(s_index(SimpleGraph::path(4)), 5U);
  EXPECT_EQ(path_s_formula(4), 5U);
}

TEST(Graphs, BipartiteBoundValues) {
  EXPECT_EQ(bound_bipartite_value(1), 1U);
  EXPECT_EQ(bound_bipartite_value(2), 3U);
  EXPECT_EQ(bound_bipartite_value(3), 5U);
  EXPECT_EQ(bound_bipartite_value(4), 8U);
}

TEST(Graphs, ThetaValues) {
  EXPECT_EQ(theta(SimpleGraph::cycle(4)), kInfinite);
  EXPECT_EQ(theta(SimpleGraph::complete(3)), 3U);
  EXPECT_EQ(theta(SimpleGraph::cycle(5)), 5U);
  EXPECT_EQ(theta_upper_odd_cycle(SimpleGraph::cycle(5), {0, 1, 2, 3, 4}), 7U);
  EXPECT_EQ(bound_theta(3), 4U);
  EXPECT_THROW(bound_theta(kInfinite), PreconditionError);
}

TEST(Graphs, ThetaVariantsDifferOnlyWithDiagonal) {
  for (const auto& g : graph_classes(5)) {
    if (!is_connected(g) || is_bipartite(g)) continue;
    EXPECT_LE(theta(g, false), theta(g, true));
  }
}

TEST(Graphs, ClassCountsMatchBruteForce) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(graph_classes(n).size(), oracle::count_graph_classes(n));
  EXPECT_EQ(graph_classes(6).size(), 156U);
  EXPECT_EQ(graph_classes(7).size(), 1044U);
}

TEST(Graphs, CanonicalCodeIsInvariant) {
  SimpleGraph a(4), b(4);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  b.add_edge(3, 2);
  b.add_edge(2, 0);
  EXPECT_EQ(canonical_graph_code(a), canonical_graph_code(b));
}

TEST(Graphs, SampledCollectionIsLowerBound) {
  const auto g = SimpleGraph::cycle(6);
  const auto sampled = s_collection_sampled(g.relation(), 200, 1);
  EXPECT_TRUE(sampled.lower_bound_only);
  EXPECT_LE(sampled.count(), s_index(g));
}

TEST(Graphs, OpenPairsNeverExceedAllPairs) {
  const auto g = SimpleGraph::path(4);
  for (const auto& t : enumerate_topologies(4)) EXPECT_LE(s_index(g, t), s_index(g));
}
