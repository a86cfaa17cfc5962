#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hyperrel/dynamics.hpp"
#include "hyperrel/natset.hpp"
#include "hyperrel/node_set.hpp"
#include "hyperrel/relations.hpp"
#include "hyperrel/topology.hpp"

namespace hyperrel {

inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

/// Undirected loop-free graph on {0, ..., n-1}.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n);

  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph complete(std::size_t n);
  /// Symmetric part of a relation, loops dropped.
  static SimpleGraph from_relation(const BooleanRelation& rho);

  std::size_t n() const { return adj_.size(); }
  /// Throws InvalidArgument for loops or out-of-range nodes.
  void add_edge(Node i, Node j);
  bool adjacent(Node i, Node j) const { return adj_[i].contains(j); }
  NodeSet neighbors(Node v) const { return adj_[v]; }
  std::size_t edge_count() const;
  std::vector<std::pair<Node, Node>> edges() const;
  /// Both orientations of every edge.
  BooleanRelation relation() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<NodeSet> adj_;
};

bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
/// BFS distances; kInfinite between components, 0 on the diagonal.
std::vector<std::vector<std::size_t>> distance_matrix(const SimpleGraph& g);
/// kInfinite for disconnected graphs.
std::size_t diameter(const SimpleGraph& g);

/// {d(u,v) + 2k : u ∈ U, v ∈ V, k >= 0} ∩ N. Throws PreconditionError if g is
/// disconnected, InvalidArgument if U or V is empty.
EventuallyPeriodicSet l_set(const SimpleGraph& g, NodeSet u, NodeSet v);

struct MoguceReport {
  bool bipartite = false;
  std::size_t pairs_checked = 0;
  /// Pairs with S(U,V) != L(U,V); only counted for bipartite graphs.
  std::size_t equality_violations = 0;
  /// Pairs with L(U,V) not contained in S(U,V).
  std::size_t inclusion_violations = 0;
  std::optional<std::pair<NodeSet, NodeSet>> first_violation;
  Verdict verdict;
};

/// Compares S(U,V) with L(U,V) over all pairs of nonempty opens: equality for
/// bipartite graphs, inclusion L ⊆ S otherwise. Throws PreconditionError if g is
/// disconnected.
MoguceReport verify_moguce(const SimpleGraph& g, const FiniteTopology& topo);
/// Same over all pairs of nonempty subsets; n <= 10.
MoguceReport verify_moguce(const SimpleGraph& g);

/// Distinct return-time sets S(U,V) of a relation.
struct SCollection {
  std::vector<EventuallyPeriodicSet> sets;  // sorted
  /// Set when only a sample of pairs was examined.
  bool lower_bound_only = false;
  std::size_t count() const { return sets.size(); }
};

/// Over all nonempty subsets U, V. Throws GuardError for n > 10.
SCollection s_collection(const BooleanRelation& rho);
/// Over all nonempty opens U, V.
SCollection s_collection(const BooleanRelation& rho, const FiniteTopology& topo);
/// `samples` random pairs of nonempty subsets, for any n; lower bound only.
SCollection s_collection_sampled(const BooleanRelation& rho, std::size_t samples, std::uint64_t seed);

/// S_G over all nonempty subsets. Throws GuardError for n > 10.
std::size_t s_index(const SimpleGraph& g);
std::size_t s_index(const SimpleGraph& g, const FiniteTopology& topo);

/// d + (d^2 - [d odd]) / 4 for the diameter d. Throws PreconditionError if disconnected.
std::size_t bound_bipartite(const SimpleGraph& g);
std::size_t bound_bipartite_value(std::size_t d);
/// The value n-1 + ((n-1)^2 - [n-1 odd]) / 4 claimed for S_{P_n}.
std::size_t path_s_formula(std::size_t n);

/// Smallest L such that every pair of nodes is joined by an even and by an odd
/// walk of length in 1..L; kInfinite if none. `include_diagonal` decides whether
/// pairs (u,u) take part.
std::size_t theta(const SimpleGraph& g, bool include_diagonal = true);
/// floor((ϑ + 1)^2 / 4). Throws PreconditionError for ϑ infinite.
std::size_t bound_theta(std::size_t theta_value);
/// max over u, v of 2 d(u,C) + d(u,v) + |C| for an odd closed contour C given
/// as its node sequence. Throws InvalidArgument if C is not one.
std::size_t theta_upper_odd_cycle(const SimpleGraph& g, const std::vector<Node>& cycle);

/// One representative per isomorphism class of graphs on n <= 8 nodes,
/// ordered by canonical code. Throws GuardError for n > 8.
std::vector<SimpleGraph> graph_classes(std::size_t n);
/// Canonical code: minimum over relabelings of the edge bit string.
std::uint64_t canonical_graph_code(const SimpleGraph& g);

}  // namespace hyperrel
