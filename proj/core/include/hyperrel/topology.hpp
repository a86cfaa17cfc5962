#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperrel/error.hpp"
#include "hyperrel/node_set.hpp"

namespace hyperrel {

class TopologyError : public InvalidArgument {
 public:
  enum class Kind { MissingEmptyOrFull, NotClosedUnderUnion, NotClosedUnderIntersection, OutOfRange };

  TopologyError(Kind kind, std::optional<std::pair<NodeSet, NodeSet>> witness);

  Kind kind() const { return kind_; }
  /// The offending pair for the closure failures.
  const std::optional<std::pair<NodeSet, NodeSet>>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::optional<std::pair<NodeSet, NodeSet>> witness_;
};

/// A topology on {0, ..., n-1}. Opens are deduplicated and sorted by
/// (size, bit value), so opens().front() is the empty set and opens().back()
/// the full set.
class FiniteTopology {
 public:
  /// Validates the axioms; throws TopologyError.
  static FiniteTopology validate(std::size_t n, std::vector<NodeSet> opens);
  /// Power set; throws GuardError for n > 20.
  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology antidiscrete(std::size_t n);
  /// Smallest topology containing the given sets.
  static FiniteTopology generated_by(std::size_t n, const std::vector<NodeSet>& generators);

  std::size_t n() const { return n_; }
  NodeSet ground() const { return NodeSet::full(n_); }
  const std::vector<NodeSet>& opens() const { return opens_; }
  /// All opens except the empty set.
  std::vector<NodeSet> nonempty_opens() const;
  /// Minimal nonempty opens; they are pairwise disjoint.
  const std::vector<NodeSet>& minimal_opens() const { return minimal_; }
  bool is_open(NodeSet s) const;
  bool is_discrete() const { return opens_.size() == (std::size_t{1} << n_); }
  bool is_antidiscrete() const { return opens_.size() == 2; }
  /// Intersection of all opens containing v.
  NodeSet neighborhood(Node v) const { return neighborhood_[v]; }

  bool operator==(const FiniteTopology& o) const { return n_ == o.n_ && opens_ == o.opens_; }

 private:
  FiniteTopology(std::size_t n, std::vector<NodeSet> opens);

  std::size_t n_;
  std::vector<NodeSet> opens_;
  std::vector<NodeSet> minimal_;
  std::vector<NodeSet> neighborhood_;
};

/// Every labeled topology on n <= 4 points, in increasing order of the
/// bitmask over subsets. Throws GuardError for n > 4.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

/// `count` topologies generated by at most three random subsets, seeded.
std::vector<FiniteTopology> sample_topologies(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace hyperrel
