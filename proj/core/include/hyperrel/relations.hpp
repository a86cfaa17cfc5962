#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hyperrel/natset.hpp"
#include "hyperrel/node_set.hpp"

namespace hyperrel {

/// A binary relation on {0, ..., n-1}, n <= 64, stored as one bit row per node:
/// row(i) is the image of i.
class BooleanRelation {
 public:
  BooleanRelation() = default;
  explicit BooleanRelation(std::size_t n);
  BooleanRelation(std::size_t n, std::initializer_list<std::pair<Node, Node>> pairs);

  static BooleanRelation identity(std::size_t n);
  static BooleanRelation from_rows(std::vector<NodeSet> rows);

  std::size_t n() const { return rows_.size(); }
  bool contains(Node i, Node j) const { return rows_[i].contains(j); }
  void insert(Node i, Node j) { rows_[i].insert(j); }
  void erase(Node i, Node j) { rows_[i].erase(j); }
  NodeSet row(Node i) const { return rows_[i]; }
  const std::vector<NodeSet>& rows() const { return rows_; }
  std::size_t size() const;
  bool is_all_ones() const;

  /// x_i ρ^-1 x_j iff x_j ρ x_i.
  BooleanRelation inverse() const;
  /// ρ(S) = union of the rows of S.
  NodeSet image(NodeSet s) const;
  NodeSet domain() const;
  NodeSet range() const;
  /// Keeps only rows of nodes in `keep`.
  BooleanRelation restrict_rows(NodeSet keep) const;

  auto operator<=>(const BooleanRelation&) const = default;

 private:
  std::vector<NodeSet> rows_;
};

/// σ∘ρ: first ρ, then σ. Throws InvalidArgument on size mismatch.
BooleanRelation compose(const BooleanRelation& sigma, const BooleanRelation& rho);
/// ρ^k with ρ^0 the identity.
BooleanRelation power(const BooleanRelation& rho, std::size_t k);

struct BooleanRelationHash {
  std::size_t operator()(const BooleanRelation& r) const noexcept;
};

/// Distinct powers ρ^1, ..., ρ^(s+p-1) with ρ^(k+p) = ρ^k for k >= s.
class PowerTrace {
 public:
  explicit PowerTrace(const BooleanRelation& rho);

  std::size_t preperiod() const { return preperiod_; }
  std::size_t period() const { return period_; }
  const std::vector<BooleanRelation>& powers() const { return powers_; }
  /// ρ^k for k >= 1.
  const BooleanRelation& at(std::size_t k) const;

 private:
  std::vector<BooleanRelation> powers_;
  std::size_t preperiod_ = 1;
  std::size_t period_ = 1;
};

/// An eventually periodic sequence (ρ_n), n >= 1: ρ_n = prefix[n-1] for
/// n <= |prefix|, then the cycle repeats.
struct RelationSequence {
  std::vector<BooleanRelation> prefix;
  std::vector<BooleanRelation> cycle;

  /// The sequence of powers of ρ, read off its power trace.
  static RelationSequence powers_of(const BooleanRelation& rho);
  static RelationSequence powers_of(const PowerTrace& trace);

  std::size_t n() const { return cycle.front().n(); }
  std::size_t threshold() const { return prefix.size(); }
  std::size_t period() const { return cycle.size(); }
  const BooleanRelation& at(std::size_t index) const;
  /// Intersection of D(ρ_n) over all n.
  NodeSet common_domain() const;
};

/// Nodes with a walk of every length k >= 1.
NodeSet d_infinity(const BooleanRelation& rho);

/// {n : ρ_n(x) meets V} for the sequence.
EventuallyPeriodicSet hit_set(const RelationSequence& seq, Node x, NodeSet v);
/// {n : ρ_n(U) meets V}.
EventuallyPeriodicSet hit_set(const RelationSequence& seq, NodeSet u, NodeSet v);
/// S(x,V) for the powers of ρ.
EventuallyPeriodicSet hit_set(const PowerTrace& trace, Node x, NodeSet v);
EventuallyPeriodicSet hit_set(const PowerTrace& trace, NodeSet u, NodeSet v);

}  // namespace hyperrel
