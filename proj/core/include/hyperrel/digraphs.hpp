#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperrel/dynamics.hpp"
#include "hyperrel/family.hpp"
#include "hyperrel/graphs.hpp"
#include "hyperrel/relations.hpp"
#include "hyperrel/topology.hpp"

namespace hyperrel {

/// Loop-free directed graph on {0, ..., n-1}.
class Digraph {
 public:
  explicit Digraph(std::size_t n);
  /// Throws InvalidArgument if the relation has a loop.
  static Digraph from_relation(const BooleanRelation& rho);

  std::size_t n() const { return out_.size(); }
  /// Throws InvalidArgument for loops or out-of-range nodes.
  void add_arc(Node i, Node j);
  void remove_arc(Node i, Node j) { out_[i].erase(j); }
  bool has_arc(Node i, Node j) const { return out_[i].contains(j); }
  NodeSet out_neighbors(Node v) const { return out_[v]; }
  NodeSet in_neighbors(Node v) const;
  std::size_t arc_count() const;
  BooleanRelation relation() const { return BooleanRelation::from_rows(out_); }

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<NodeSet> out_;
};

bool strongly_connected(const Digraph& d);
bool weakly_connected(const Digraph& d);
SimpleGraph underlying(const Digraph& d);
/// Largest directed distance; kInfinite unless strongly connected.
std::size_t directed_diameter(const Digraph& d);
bool is_tournament(const Digraph& d);

bool is_primitive(const Digraph& d);
/// Smallest k with every entry of A^k positive. Throws PreconditionError if not primitive.
std::size_t exponent(const Digraph& d);

/// Tournament whose arc between i < j is i -> j iff the bit of pair (i,j) is
/// set. Pairs are ordered (0,1), (0,2), ..., (1,2), ...; pair (0,1) is the most
/// significant bit of the code.
Digraph tournament_from_code(std::size_t n, std::uint64_t code);
std::uint64_t tournament_code(const Digraph& t);
/// The code as a 0/1 string, pair (0,1) first.
std::string code_string(std::size_t n, std::uint64_t code);
/// Lexicographic minimum of the arc bit string over all n! relabelings.
std::uint64_t canonical_tournament_code(const Digraph& t);

struct TournamentClass {
  Digraph tournament;
  std::uint64_t code;  // canonical
  /// Number of labeled tournaments in the class, n! / |Aut|.
  std::uint64_t labeled_count;
};

/// Isomorphism classes for 1 <= n <= 7, sorted by canonical code. Throws GuardError for n > 7.
std::vector<TournamentClass> tournament_classes(std::size_t n);
/// Calls f for each of the 2^(n(n-1)/2) labeled tournaments, n <= 7, in code order.
void for_each_tournament(std::size_t n, const std::function<void(const Digraph&)>& f);
/// Labeled (up_to_iso = false) or one representative per class.
std::vector<Digraph> enumerate_tournaments(std::size_t n, bool up_to_iso);

/// A Hamiltonian directed path built by insertion, validated before return.
std::vector<Node> redei_path(const Digraph& t);

/// The property names understood by wproperty().
enum class Property { Hypercyclic, StronglyHypercyclic, TopTransitive, StronglyTopTransitive };
std::string to_string(Property p);

/// Runs the property on the tuple of digraphs.
Verdict decide(Property p, const std::vector<Digraph>& ds, const FiniteTopology& topo, const FamilySpec& f);

struct WPropertyReport {
  Verdict underlying;  // the F_w verdict
  Verdict directed;    // the plain F verdict
  /// False when the directed property holds but the underlying one fails; the
  /// implication is expected only for families closed under supersets.
  bool implication_holds = true;
};

/// The property on the underlying simple graph(s).
WPropertyReport wproperty(Property p, const std::vector<Digraph>& ds, const FiniteTopology& topo, const FamilySpec& f);

struct IdiotReport {
  std::size_t exponent = 0;  // largest exponent of the tuple
  std::vector<std::size_t> diameters;
  std::vector<std::size_t> exponents;
  /// d <= e <= d + 3 for each member.
  bool diameter_relation = true;
  /// Every realized S-set of a member contains {n : n >= e}.
  bool tails_contained = true;
  /// The disjoint sets S(x, V_1..V_N) contain {n : n >= e}.
  bool joint_tails_contained = true;
  /// Set when the tuple is F-hypercyclic on the discrete topology although F
  /// has a member missing the tail (only checkable for generator families).
  std::optional<EventuallyPeriodicSet> family_member_without_tail;
  Verdict verdict;
};

/// Throws PreconditionError unless every member is a strongly connected,
/// primitive tournament.
IdiotReport idiot_check(const std::vector<Digraph>& ts, const FamilySpec& f);

struct PendeConstruction {
  std::vector<Digraph> tournaments;  // T_1, then T_2 repeated
  FiniteTopology topology;
};

/// The tournaments of the n >= 5 counterexample: x1 beats everyone, a 3-cycle
/// on x3, x4, x5 dominated by x2 in T_1, with x2 and x3 exchanged in T_2;
/// remaining arcs point from lower to higher index. Throws InvalidArgument if n < 5 or count < 2.
PendeConstruction build_pende_counterexample(std::size_t n, std::size_t count);

struct SurveyRow {
  std::uint64_t code;
  std::size_t s_value;
  std::optional<std::size_t> exponent;
  bool strong;
  std::uint64_t labeled_count;
  std::vector<EventuallyPeriodicSet> sets;
};

struct SurveyReport {
  std::size_t n = 0;
  std::vector<SurveyRow> rows;
  std::size_t max_s = 0;
  /// Distinct S values, ascending.
  std::vector<std::size_t> values;
};

/// S_T over the discrete topology for every class on n <= 7 nodes.
SurveyReport survey(std::size_t n, bool strong_only, std::size_t threads = 1);

}  // namespace hyperrel
