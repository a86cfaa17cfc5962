#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperrel/family.hpp"
#include "hyperrel/natset.hpp"
#include "hyperrel/node_set.hpp"
#include "hyperrel/relations.hpp"
#include "hyperrel/topology.hpp"

namespace hyperrel {

/// N >= 1 eventually periodic relation sequences on a common node set, viewed
/// on a joint frame: positions 1..threshold() form the head, after which the
/// images repeat with period period(). With N = 1 the deciders below are the
/// single-relation properties; with N >= 2 they are the disjoint ones.
class RelationTuple {
 public:
  explicit RelationTuple(const BooleanRelation& rho);
  explicit RelationTuple(const std::vector<BooleanRelation>& rhos);
  explicit RelationTuple(RelationSequence seq);
  explicit RelationTuple(std::vector<RelationSequence> seqs);

  std::size_t arity() const { return arity_; }
  std::size_t n() const { return n_; }
  std::size_t threshold() const { return threshold_; }
  std::size_t period() const { return period_; }
  /// threshold() + period(): every position-dependent quantity is determined on 1..horizon().
  std::size_t horizon() const { return threshold_ + period_; }

  /// ρ_{j,pos}(x) for 1 <= pos <= horizon().
  NodeSet image(std::size_t j, std::size_t pos, Node x) const { return images_[(j * horizon() + pos - 1) * n_ + x]; }
  NodeSet image(std::size_t j, std::size_t pos, NodeSet u) const;
  /// Maps any n >= 1 to its representative position in 1..horizon().
  std::size_t position(std::size_t n) const;

  /// Nodes in the domain of every ρ_{j,n}; for powers this is the intersection of the D_∞(ρ_j).
  NodeSet domain() const { return domain_; }

  /// {n : ρ_{j,n}x meets V_j for all j}.
  EventuallyPeriodicSet hit_set(Node x, const std::vector<NodeSet>& targets) const;
  /// {n : some x in U has ρ_{j,n}x meeting V_j for all j}.
  EventuallyPeriodicSet hit_set(NodeSet u, const std::vector<NodeSet>& targets) const;

 private:
  void build(std::vector<RelationSequence> seqs);

  std::size_t arity_ = 0;
  std::size_t n_ = 0;
  std::size_t threshold_ = 0;
  std::size_t period_ = 1;
  std::vector<NodeSet> images_;
  NodeSet domain_;
};

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

/// A choice of y_{j,n} for every n: head[n-1] for n <= head.size(), after
/// which `tail` repeats. Each entry holds one node per relation of the tuple.
struct SelectionSchedule {
  std::vector<std::vector<Node>> head;
  std::vector<std::vector<Node>> tail;

  const std::vector<Node>& at(std::size_t n) const;
  std::size_t threshold() const { return head.size(); }
  std::size_t period() const { return tail.size(); }
};

/// The open sets (source U, or point x, and targets V_1..V_N) whose return-time
/// set fails the family, together with that set.
struct Refutation {
  std::optional<Node> point;
  std::optional<NodeSet> source;
  std::vector<NodeSet> targets;
  EventuallyPeriodicSet set;
};

/// "(x3;{x5}):EMPTY", "({x2};{x5}):EMPTY".
std::string render(const Refutation& r);

struct Verdict {
  Status status = Status::No;
  std::optional<Node> witness;
  std::optional<SelectionSchedule> selection;
  std::optional<Refutation> refutation;
  std::string note;

  bool yes() const { return status == Status::Yes; }
  bool no() const { return status == Status::No; }
};

/// Points x in domain() with S(x, V_1..V_N) in F for every tuple of nonempty opens.
NodeSet hypercyclic_vectors(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);
/// Existential: witness is the smallest hypercyclic vector.
Verdict is_hypercyclic(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);
/// Universal over nonempty open U and target tuples; for N >= 2 the set is
/// {n : (∃x∈U) ρ_{j,n}x meets V_j for all j}.
Verdict is_top_transitive(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);

/// Whether x is a strong (d)F-hypercyclic element. Exact for every built-in
/// family except FiniteUnionsOf, where a bounded search over eventually
/// periodic selections may end in Unknown.
Verdict strong_hypercyclic_vector(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f, Node x);

struct StrongVectors {
  NodeSet yes;
  NodeSet unknown;
  std::vector<Verdict> per_node;
};

StrongVectors strong_hypercyclic_vectors(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);
Verdict is_strongly_hypercyclic(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);

/// N = 1: one selection y_n ∈ ρ_n(U) per open U serving all V at once.
/// N >= 2: for every U and V_1..V_N some x ∈ U admits a selection for that tuple.
Verdict is_strongly_top_transitive(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f);

/// True iff the schedule picks y_{j,n} ∈ ρ_{j,n}(source) for all n and every
/// tuple of nonempty opens is visited on a set belonging to F.
bool selection_is_valid(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f, NodeSet source,
                        const SelectionSchedule& schedule);

/// Some F-member H with lower <= H <= upper, if one exists.
std::optional<EventuallyPeriodicSet> member_between(const FamilySpec& f, const EventuallyPeriodicSet& lower,
                                                    const EventuallyPeriodicSet& upper);

struct ShiftTransferReport {
  /// Some x ∈ ρ^l(z) is F-hypercyclic (resp. strong).
  bool premise = false;
  Status strong_premise = Status::No;
  /// For every open V and every ω ∈ D_∞(ρ): S(ω,V) - l ∈ F implies S(ω,V) ∈ F.
  bool hypothesis = false;
  bool conclusion = false;
  Status strong_conclusion = Status::No;
  /// Yes when the transfer holds on this instance, No when premise and
  /// hypothesis hold but the conclusion fails.
  Verdict verdict;
};

/// Throws PreconditionError if l == 0.
ShiftTransferReport check_shift_transfer(const BooleanRelation& rho, const FiniteTopology& topo, const FamilySpec& f,
                                         Node z, std::size_t l);

}  // namespace hyperrel
