#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "hyperrel/dynamics.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/graphs.hpp"

using namespace hyperrel;

namespace {

BooleanRelation pende_i() { return BooleanRelation(5, {{2, 1}, {2, 4}, {1, 0}, {0, 3}, {3, 0}}); }
FiniteTopology pende_i_topology() {
  return FiniteTopology::validate(5, {NodeSet{}, NodeSet{1}, NodeSet{4}, NodeSet{1, 4}, NodeSet::full(5)});
}
BooleanRelation pende_ii() { return BooleanRelation(4, {{0, 1}, {0, 2}, {2, 3}, {3, 2}}); }
FiniteTopology pende_ii_topology() {
  return FiniteTopology::validate(4, {NodeSet{}, NodeSet{1}, NodeSet{2}, NodeSet{1, 2}, NodeSet::full(4)});
}

RelationTuple copies(const BooleanRelation& r, std::size_t n) { return RelationTuple(std::vector<BooleanRelation>(n, r)); }

BooleanRelation random_relation(std::mt19937_64& rng, std::size_t n, unsigned density) {
  BooleanRelation r(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (rng() % density == 0) r.insert(i, j);
    }
  }
  return r;
}

std::vector<FamilySpec> families() {
  return {FamilySpec::all_nonempty(),
          FamilySpec::odd_only(),
          FamilySpec::infinite(),
          FamilySpec::cofinite(),
          FamilySpec::tail(2),
          FamilySpec::at_least(2),
          FamilySpec::positive_lower_density(),
          FamilySpec::upward_from({EventuallyPeriodicSet::cofinite({1})}),
          FamilySpec::finite_unions_of({EventuallyPeriodicSet::progression(1, 2), EventuallyPeriodicSet::progression(2, 2)},
                                       false)};
}

}  // namespace

TEST(Dynamics, PendeOneHasOnlyX3) {
  const RelationTuple t(pende_i());
  const auto topo = pende_i_topology();
  const auto f = FamilySpec::all_nonempty();
  EXPECT_EQ(hypercyclic_vectors(t, topo, f), NodeSet{2});
  const auto v = is_hypercyclic(t, topo, f);
  EXPECT_TRUE(v.yes());
  EXPECT_EQ(v.witness, Node{2});
  EXPECT_TRUE(is_top_transitive(t, topo, f).no());
}

TEST(Dynamics, PendeOneIsNotStrong) {
  const RelationTuple t(pende_i());
  const auto s = strong_hypercyclic_vectors(t, pende_i_topology(), FamilySpec::all_nonempty());
  EXPECT_TRUE(s.yes.empty());
  EXPECT_TRUE(s.unknown.empty());
  EXPECT_TRUE(is_strongly_hypercyclic(t, pende_i_topology(), FamilySpec::all_nonempty()).no());
}

TEST(Dynamics, PendeOneTransitivityRefutedByX2X5) {
  const auto v = is_top_transitive(RelationTuple(pende_i()), pende_i_topology(), FamilySpec::all_nonempty());
  ASSERT_TRUE(v.refutation.has_value());
  EXPECT_TRUE(v.refutation->set.is_empty());
}

TEST(Dynamics, PendeOneCopies) {
  const auto f = FamilySpec::all_nonempty();
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto t = copies(pende_i(), n);
    EXPECT_TRUE(is_hypercyclic(t, pende_i_topology(), f).yes());
    EXPECT_TRUE(is_strongly_hypercyclic(t, pende_i_topology(), f).no());
    EXPECT_TRUE(is_top_transitive(t, pende_i_topology(), f).no());
  }
}

TEST(Dynamics, PendeTwoCopiesHaveUniqueVectorX1) {
  const auto f = FamilySpec::all_nonempty();
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto t = copies(pende_ii(), n);
    EXPECT_EQ(hypercyclic_vectors(t, pende_ii_topology(), f), NodeSet{0});
    EXPECT_TRUE(is_strongly_hypercyclic(t, pende_ii_topology(), f).no());
    EXPECT_TRUE(is_top_transitive(t, pende_ii_topology(), f).no());
  }
}

TEST(Dynamics, FourCycleUnderOddOnlyFailsEverything) {
  const auto c4 = SimpleGraph::cycle(4).relation();
  const auto topo = FiniteTopology::discrete(4);
  const auto f = FamilySpec::odd_only();
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto t = copies(c4, n);
    EXPECT_TRUE(hypercyclic_vectors(t, topo, f).empty());
    EXPECT_TRUE(is_hypercyclic(t, topo, f).no());
    EXPECT_TRUE(is_strongly_hypercyclic(t, topo, f).no());
    EXPECT_TRUE(is_top_transitive(t, topo, f).no());
    EXPECT_TRUE(is_strongly_top_transitive(t, topo, f).no());
  }
}

TEST(Dynamics, CompleteGraphsNeedNMinusOne) {
  const auto f = FamilySpec::upward_from({EventuallyPeriodicSet::cofinite({1})});
  for (std::size_t n = 3; n <= 5; ++n) {
    const RelationTuple t(SimpleGraph::complete(n).relation());
    const auto topo = FiniteTopology::discrete(n);
    EXPECT_TRUE(is_hypercyclic(t, topo, f).yes());
    EXPECT_TRUE(is_top_transitive(t, topo, f).yes());
    // One point per step cannot visit two disjoint singletons at almost every step.
    EXPECT_TRUE(is_strongly_hypercyclic(t, topo, f).no());
  }
}

TEST(Dynamics, DisjointK2PairHasEmptyJointSet) {
  const auto k2 = SimpleGraph::complete(2).relation();
  const auto t = copies(k2, 2);
  EXPECT_TRUE(t.hit_set(0, {NodeSet{1}, NodeSet{0}}).is_empty());
}

TEST(Dynamics, NonBipartiteGraphPairsAreStronglyDisjointHypercyclic) {
  const auto f = FamilySpec::all_nonempty();
  std::vector<SimpleGraph> graphs;
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const auto& g : graph_classes(n)) {
      if (is_connected(g) && !is_bipartite(g)) graphs.push_back(g);
    }
  }
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      if (a.n() != b.n()) continue;
      const RelationTuple t(std::vector<BooleanRelation>{a.relation(), b.relation()});
      const auto topo = FiniteTopology::discrete(a.n());
      const auto s = strong_hypercyclic_vectors(t, topo, f);
      EXPECT_EQ(s.yes, NodeSet::full(a.n()));
    }
  }
}

TEST(Dynamics, MatchesDefinitionOracle) {
  std::mt19937_64 rng(99);
  const auto f = FamilySpec::all_nonempty();
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto r = random_relation(rng, n, 3);
    const auto tops = enumerate_topologies(n);
    const auto& topo = tops[rng() % tops.size()];
    const RelationTuple t(r);
    const auto m = oracle::to_matrix(r);
    const auto plain = hypercyclic_vectors(t, topo, f);
    for (Node x = 0; x < n; ++x) {
      ASSERT_EQ(plain.contains(x), oracle::hypercyclic_all_nonempty(m, topo, x));
      const auto v = strong_hypercyclic_vector(t, topo, f, x);
      ASSERT_NE(v.status, Status::Unknown);
      ASSERT_EQ(v.yes(), oracle::strong_all_nonempty(m, topo, x)) << "trial " << trial << " x=" << x;
    }
  }
}

TEST(Dynamics, StrongSelectionsAreValid) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto r = random_relation(rng, n, 2);
    const auto tops = enumerate_topologies(n);
    const auto& topo = tops[rng() % tops.size()];
    const RelationTuple t(r);
    for (const auto& f : families()) {
      for (Node x = 0; x < n; ++x) {
        const auto v = strong_hypercyclic_vector(t, topo, f, x);
        if (!v.yes() || !v.selection) continue;
        ASSERT_TRUE(selection_is_valid(t, topo, f, NodeSet::single(x), *v.selection)) << f.name();
      }
    }
  }
}

TEST(Dynamics, StrongImpliesPlainForUpwardClosedFamilies) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const auto r = random_relation(rng, n, 2);
    const auto tops = enumerate_topologies(n);
    const auto& topo = tops[rng() % tops.size()];
    const RelationTuple t(r);
    for (const auto& f : families()) {
      if (!f.upward_closed()) continue;
      if (is_strongly_hypercyclic(t, topo, f).yes()) ASSERT_TRUE(is_hypercyclic(t, topo, f).yes()) << f.name();
      if (is_strongly_top_transitive(t, topo, f).yes()) ASSERT_TRUE(is_top_transitive(t, topo, f).yes()) << f.name();
    }
  }
}

TEST(Dynamics, RestrictionToDInfinityChangesNothing) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto tops = enumerate_topologies(n);
    const std::size_t cells = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      BooleanRelation r(n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) r.insert(c / n, c % n);
      }
      // Rows of every power outside D_inf are dropped; the powers themselves are kept.
      auto seq = RelationSequence::powers_of(r);
      const NodeSet keep = d_infinity(r);
      for (auto& rel : seq.prefix) rel = rel.restrict_rows(keep);
      for (auto& rel : seq.cycle) rel = rel.restrict_rows(keep);
      const RelationTuple a(r), b(seq);
      for (const auto& topo : tops) {
        for (const auto& f : families()) {
          ASSERT_EQ(hypercyclic_vectors(a, topo, f), hypercyclic_vectors(b, topo, f));
          ASSERT_EQ(strong_hypercyclic_vectors(a, topo, f).yes, strong_hypercyclic_vectors(b, topo, f).yes);
        }
      }
    }
  }
}

TEST(Dynamics, DisjointHypercyclicityProjectsToComponents) {
  const auto tops2 = enumerate_topologies(2);
  const auto tops3 = enumerate_topologies(3);
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& tops = n == 2 ? tops2 : tops3;
    const std::size_t cells = n * n;
    std::vector<BooleanRelation> rels;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      BooleanRelation r(n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) r.insert(c / n, c % n);
      }
      if (!d_infinity(r).empty()) rels.push_back(r);
    }
    for (std::size_t i = 0; i < rels.size(); i += (n == 3 ? 7 : 1)) {
      for (std::size_t j = 0; j < rels.size(); j += (n == 3 ? 5 : 1)) {
        const RelationTuple pair(std::vector<BooleanRelation>{rels[i], rels[j]});
        for (const auto& topo : tops) {
          for (const auto& f : families()) {
            if (!f.upward_closed() && !(rels[i] == rels[j])) continue;
            if (!is_hypercyclic(pair, topo, f).yes()) continue;
            ASSERT_TRUE(is_hypercyclic(RelationTuple(rels[i]), topo, f).yes());
            ASSERT_TRUE(is_hypercyclic(RelationTuple(rels[j]), topo, f).yes());
          }
        }
      }
    }
  }
}

TEST(Dynamics, DiscreteSingletonCharacterization) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto r = random_relation(rng, n, 2);
    const RelationTuple t(r);
    const PowerTrace trace(r);
    const auto topo = FiniteTopology::discrete(n);
    const NodeSet dinf = d_infinity(r);
    for (const auto& f : families()) {
      const auto vectors = hypercyclic_vectors(t, topo, f);
      for (Node x = 0; x < n; ++x) {
        bool expected = dinf.contains(x);
        for (Node v = 0; v < n && expected; ++v) expected = f.contains(hit_set(trace, x, NodeSet::single(v)));
        ASSERT_EQ(vectors.contains(x), expected) << f.name();
      }
    }
  }
}

TEST(Dynamics, AntidiscreteCollapse) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto r = random_relation(rng, n, 2);
    const RelationTuple t(r);
    const auto topo = FiniteTopology::antidiscrete(n);
    for (const auto& f : families()) {
      if (!f.contains_naturals()) continue;
      const auto plain = hypercyclic_vectors(t, topo, f);
      EXPECT_EQ(plain, d_infinity(r));
      EXPECT_EQ(strong_hypercyclic_vectors(t, topo, f).yes, plain);
    }
  }
}

TEST(Dynamics, MemberBetween) {
  const auto odds = EventuallyPeriodicSet::progression(1, 2);
  EXPECT_EQ(member_between(FamilySpec::all_nonempty(), EventuallyPeriodicSet::empty(), odds), odds);
  EXPECT_FALSE(member_between(FamilySpec::odd_only(), EventuallyPeriodicSet::finite({2}), EventuallyPeriodicSet::naturals()));
  EXPECT_TRUE(member_between(FamilySpec::odd_only(), EventuallyPeriodicSet::finite({3}), EventuallyPeriodicSet::naturals()));
  const auto f = FamilySpec::finite_unions_of({odds, EventuallyPeriodicSet::finite({2})}, false);
  const auto lower = EventuallyPeriodicSet::finite({1});
  const auto upper = EventuallyPeriodicSet::cofinite({4});
  const auto h = member_between(f, lower, upper);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(f.contains(*h) && lower.is_subset_of(*h) && h->is_subset_of(upper));
  EXPECT_FALSE(member_between(f, EventuallyPeriodicSet::finite({4}), EventuallyPeriodicSet::naturals()));
}

TEST(Dynamics, ShiftTransferAtLeastHolds) {
  const auto f = FamilySpec::at_least(2);
  const auto r = SimpleGraph::cycle(5).relation();
  for (Node z = 0; z < 5; ++z) {
    const auto rep = check_shift_transfer(r, FiniteTopology::discrete(5), f, z, 1);
    EXPECT_TRUE(rep.hypothesis);
    EXPECT_NE(rep.verdict.status, Status::No);
  }
}

TEST(Dynamics, ShiftTransferOddOnlyBreaksOnFourCycle) {
  const auto rep = check_shift_transfer(SimpleGraph::cycle(4).relation(), FiniteTopology::discrete(4), FamilySpec::odd_only(), 0, 1);
  EXPECT_FALSE(rep.hypothesis);
  EXPECT_THROW(check_shift_transfer(SimpleGraph::cycle(4).relation(), FiniteTopology::discrete(4), FamilySpec::odd_only(), 0, 0),
               PreconditionError);
}

TEST(Dynamics, RefutationRendering) {
  Refutation r;
  r.point = 2;
  r.targets = {NodeSet{4}};
  EXPECT_EQ(render(r), "(x3;{x5}):EMPTY");
}
