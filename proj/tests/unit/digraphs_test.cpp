#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "hyperrel/digraphs.hpp"
#include "hyperrel/error.hpp"

using namespace hyperrel;

namespace {

Digraph three_cycle() {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  return d;
}

Digraph transitive(std::size_t n) {
  Digraph d(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) d.add_arc(i, j);
  }
  return d;
}

// Contour x1x2x3x4 with chords x1x3 and x2x4.
Digraph strong_four() {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 3);
  d.add_arc(3, 0);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  return d;
}

std::uint64_t labeled_classes(std::size_t n) {
  std::set<std::uint64_t> seen;
  for_each_tournament(n, [&](const Digraph& t) { seen.insert(canonical_tournament_code(t)); });
  return seen.size();
}

}  // namespace

TEST(Digraphs, Connectivity) {
  EXPECT_TRUE(strongly_connected(three_cycle()));
  EXPECT_FALSE(strongly_connected(transitive(4)));
  EXPECT_TRUE(weakly_connected(transitive(4)));
  const auto pende = Digraph::from_relation(BooleanRelation(5, {{2, 1}, {2, 4}, {1, 0}, {0, 3}, {3, 0}}));
  EXPECT_TRUE(weakly_connected(pende));
  EXPECT_FALSE(strongly_connected(pende));
}

TEST(Digraphs, RejectsLoops) {
  Digraph d(2);
  EXPECT_THROW(d.add_arc(1, 1), InvalidArgument);
  EXPECT_THROW(Digraph::from_relation(BooleanRelation::identity(2)), InvalidArgument);
}

TEST(Digraphs, Primitivity) {
  EXPECT_FALSE(is_primitive(three_cycle()));
  EXPECT_THROW(exponent(three_cycle()), PreconditionError);
  const auto pc = build_pende_counterexample(5, 2);
  const Digraph& t1 = pc.tournaments.front();
  EXPECT_TRUE(is_primitive(t1) == strongly_connected(t1));
}

TEST(Digraphs, ExponentMatchesWalkOracle) {
  const auto m = oracle::to_matrix(strong_four().relation());
  std::size_t e = 0;
  for (std::size_t k = 1; k <= 20 && e == 0; ++k) {
    bool all = true;
    for (const auto& row : oracle::walk_power(m, k)) {
      for (bool b : row) all = all && b;
    }
    if (all) e = k;
  }
  EXPECT_EQ(exponent(strong_four()), e);
  const PowerTrace trace(strong_four().relation());
  for (std::size_t q = e; q < e + 10; ++q) EXPECT_TRUE(trace.at(q).is_all_ones());
}

TEST(Digraphs, TournamentCodes) {
  EXPECT_EQ(tournament_code(transitive(3)), 0b111U);
  EXPECT_EQ(code_string(3, 0b101), "101");
  EXPECT_EQ(tournament_from_code(4, 0b101101), tournament_from_code(4, tournament_code(tournament_from_code(4, 0b101101))));
  EXPECT_THROW(tournament_code(Digraph(3)), InvalidArgument);
}

TEST(Digraphs, ClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 12, 56, 456};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(tournament_classes(n).size(), expected[n - 1]) << n;
  EXPECT_THROW(tournament_classes(8), GuardError);
}

TEST(Digraphs, ClassesAgreeWithLabeledCanonicalForms) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(tournament_classes(n).size(), labeled_classes(n));
}

TEST(Digraphs, OrbitSizesSumToLabeledCount) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& c : tournament_classes(n)) total += c.labeled_count;
    EXPECT_EQ(total, std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Digraphs, ThreeNodeClasses) {
  const auto classes = tournament_classes(3);
  ASSERT_EQ(classes.size(), 2U);
  std::size_t strong = 0;
  for (const auto& c : classes) strong += strongly_connected(c.tournament) ? 1 : 0;
  EXPECT_EQ(strong, 1U);
}

TEST(Digraphs, RedeiPathsOnAllFiveTournaments) {
  std::size_t count = 0;
  for_each_tournament(5, [&](const Digraph& t) {
    const auto path = redei_path(t);
    ASSERT_EQ(path.size(), 5U);
    std::set<Node> seen(path.begin(), path.end());
    ASSERT_EQ(seen.size(), 5U);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) ASSERT_TRUE(t.has_arc(path[i], path[i + 1]));
    ++count;
  });
  EXPECT_EQ(count, 1024U);
  EXPECT_EQ(redei_path(transitive(4)), (std::vector<Node>{0, 1, 2, 3}));
}

TEST(Digraphs, UnderlyingPropertyOfTransitiveTournament) {
  const auto r = wproperty(Property::Hypercyclic, {transitive(4)}, FiniteTopology::discrete(4), FamilySpec::all_nonempty());
  EXPECT_TRUE(r.underlying.yes());
  EXPECT_TRUE(r.directed.no());
  EXPECT_TRUE(r.implication_holds);
}

TEST(Digraphs, StronglyConnectedImpliesUnderlyingTransitive) {
  for (const auto& c : tournament_classes(4)) {
    if (!strongly_connected(c.tournament)) continue;
    const auto r = wproperty(Property::TopTransitive, {c.tournament}, FiniteTopology::discrete(4), FamilySpec::all_nonempty());
    EXPECT_TRUE(r.underlying.yes());
  }
}

TEST(Digraphs, UnderlyingImplicationOnPairs) {
  const auto a = tournament_from_code(4, 0b011010);
  const auto b = tournament_from_code(4, 0b100101);
  const auto r = wproperty(Property::Hypercyclic, {a, b}, FiniteTopology::discrete(4), FamilySpec::all_nonempty());
  const RelationTuple t(std::vector<BooleanRelation>{underlying(a).relation(), underlying(b).relation()});
  EXPECT_EQ(r.underlying.status, is_hypercyclic(t, FiniteTopology::discrete(4), FamilySpec::all_nonempty()).status);
  EXPECT_TRUE(r.implication_holds);
}

TEST(Digraphs, IdiotOnStrongFour) {
  const auto r = idiot_check({strong_four()}, FamilySpec::all_nonempty());
  EXPECT_TRUE(r.tails_contained);
  EXPECT_TRUE(r.joint_tails_contained);
  // The d <= e <= d + 3 relation is a statement for n >= 5; here d = 3, e = 9.
  EXPECT_EQ(r.diameters.front(), 3U);
  EXPECT_EQ(r.exponent, 9U);
  EXPECT_FALSE(r.diameter_relation);
  const auto sets = s_collection(strong_four().relation()).sets;
  for (const auto& s : sets) EXPECT_TRUE(s.contains_tail_from(r.exponent));
}

TEST(Digraphs, IdiotReportsFamilyMembersWithoutTail) {
  const auto r = idiot_check({strong_four()}, FamilySpec::all_nonempty());
  ASSERT_TRUE(r.family_member_without_tail.has_value());
  EXPECT_EQ(*r.family_member_without_tail, EventuallyPeriodicSet::finite({1}));
  EXPECT_THROW(idiot_check({transitive(4)}, FamilySpec::all_nonempty()), PreconditionError);
}

TEST(Digraphs, PendeConstruction) {
  const auto f = FamilySpec::all_nonempty();
  for (std::size_t n = 5; n <= 6; ++n) {
    const auto pc = build_pende_counterexample(n, 2);
    for (const auto& t : pc.tournaments) EXPECT_TRUE(is_tournament(t));
    std::vector<BooleanRelation> rels;
    for (const auto& t : pc.tournaments) rels.push_back(t.relation());
    const RelationTuple tuple(rels);
    EXPECT_EQ(hypercyclic_vectors(tuple, pc.topology, f), NodeSet{0});
    EXPECT_TRUE(is_strongly_hypercyclic(tuple, pc.topology, f).no());
  }
  EXPECT_THROW(build_pende_counterexample(4, 2), InvalidArgument);
  EXPECT_EQ(build_pende_counterexample(5, 3).tournaments.size(), 3U);
}

TEST(Digraphs, PendeArcFamilies) {
  const auto pc = build_pende_counterexample(6, 2);
  const auto& t1 = pc.tournaments[0];
  const auto& t2 = pc.tournaments[1];
  for (Node i = 1; i < 6; ++i) EXPECT_TRUE(t1.has_arc(0, i) && t2.has_arc(0, i));
  EXPECT_TRUE(t1.has_arc(1, 2) && t1.has_arc(2, 3) && t1.has_arc(3, 4) && t1.has_arc(4, 2));
  EXPECT_TRUE(t2.has_arc(2, 1) && t2.has_arc(1, 3) && t2.has_arc(3, 4) && t2.has_arc(4, 1));
  for (Node k = 2; k <= 4; ++k) EXPECT_TRUE(t1.has_arc(k, 5));
}

TEST(Digraphs, AsymmetricDigraphsHaveNoTwoStepReturns) {
  for_each_tournament(5, [](const Digraph& t) {
    const PowerTrace trace(t.relation());
    for (Node x = 0; x < 5; ++x) ASSERT_FALSE(hit_set(trace, x, NodeSet::single(x)).contains(2));
  });
}

TEST(Digraphs, StrongHypercyclicityOfTournamentsIsIndegreeCondition) {
  const auto f = FamilySpec::all_nonempty();
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto topo = FiniteTopology::discrete(n);
    for (const auto& c : tournament_classes(n)) {
      bool indegree = true;
      for (Node v = 0; v < n; ++v) indegree = indegree && !c.tournament.in_neighbors(v).empty();
      const RelationTuple t(c.tournament.relation());
      EXPECT_EQ(is_strongly_hypercyclic(t, topo, f).yes(), indegree) << code_string(n, c.code);
    }
  }
}

TEST(Digraphs, SurveySmall) {
  const auto three = survey(3, false, 1);
  ASSERT_EQ(three.rows.size(), 2U);
  const auto four = survey(4, false, 1);
  ASSERT_EQ(four.rows.size(), 4U);
  for (const auto& row : four.rows) EXPECT_EQ(row.s_value, s_collection(tournament_from_code(4, row.code).relation()).count());
  EXPECT_EQ(survey(4, true, 1).rows.size(), 1U);
  EXPECT_THROW(survey(8, false, 1), GuardError);
}

TEST(Digraphs, SurveyIsThreadCountIndependent) {
  const auto a = survey(5, false, 1);
  const auto b = survey(5, false, 3);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].code, b.rows[i].code);
    EXPECT_EQ(a.rows[i].sets, b.rows[i].sets);
  }
  EXPECT_EQ(a.values, b.values);
}

TEST(Digraphs, StrongDisjointTransitivityIsStrongConnectivity) {
  const auto f = FamilySpec::all_nonempty();
  const auto topo = FiniteTopology::discrete(4);
  const auto classes = tournament_classes(4);
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      const RelationTuple t(std::vector<BooleanRelation>{a.tournament.relation(), b.tournament.relation()});
      const bool strong = strongly_connected(a.tournament) && strongly_connected(b.tournament);
      EXPECT_EQ(is_strongly_top_transitive(t, topo, f).yes(), strong);
    }
  }
  for (const auto& c : tournament_classes(5)) {
    const RelationTuple t(c.tournament.relation());
    EXPECT_EQ(is_strongly_top_transitive(t, FiniteTopology::discrete(5), f).yes(), strongly_connected(c.tournament));
  }
}
