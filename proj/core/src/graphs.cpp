#include "hyperrel/graphs.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "hyperrel/error.hpp"

namespace hyperrel {

SimpleGraph::SimpleGraph(std::size_t n) : adj_(n) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("graphs need 1..64 nodes");
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  if (n < 2) throw InvalidArgument("path needs n >= 2");
  SimpleGraph g(n);
  for (Node i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
  SimpleGraph g(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph SimpleGraph::from_relation(const BooleanRelation& rho) {
  SimpleGraph g(rho.n());
  for (Node i = 0; i < rho.n(); ++i) {
    rho.row(i).for_each([&](Node j) {
      if (i != j) g.add_edge(i, j);
    });
  }
  return g;
}

void SimpleGraph::add_edge(Node i, Node j) {
  if (i >= n() || j >= n()) throw InvalidArgument("edge endpoint out of range");
  if (i == j) throw InvalidArgument("simple graphs have no loops");
  adj_[i].insert(j);
  adj_[j].insert(i);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (NodeSet a : adj_) total += a.size();
  return total / 2;
}

std::vector<std::pair<Node, Node>> SimpleGraph::edges() const {
  std::vector<std::pair<Node, Node>> out;
  for (Node i = 0; i < n(); ++i) {
    adj_[i].for_each([&](Node j) {
      if (i < j) out.emplace_back(i, j);
    });
  }
  return out;
}

BooleanRelation SimpleGraph::relation() const { return BooleanRelation::from_rows(adj_); }

std::vector<std::vector<std::size_t>> distance_matrix(const SimpleGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInfinite));
  for (Node s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::deque<Node> queue{s};
    while (!queue.empty()) {
      const Node u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](Node v) {
        if (d[s][v] == kInfinite) {
          d[s][v] = d[s][u] + 1;
          queue.push_back(v);
        }
      });
    }
  }
  return d;
}

bool is_connected(const SimpleGraph& g) {
  const auto d = distance_matrix(g);
  return std::none_of(d[0].begin(), d[0].end(), [](std::size_t x) { return x == kInfinite; });
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.n(), -1);
  for (Node s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Node> queue{s};
    while (!queue.empty()) {
      const Node u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Node v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::size_t diameter(const SimpleGraph& g) {
  std::size_t best = 0;
  for (const auto& row : distance_matrix(g)) {
    for (std::size_t x : row) best = std::max(best, x);
  }
  return best;
}

EventuallyPeriodicSet l_set(const SimpleGraph& g, NodeSet u, NodeSet v) {
  if (u.empty() || v.empty()) throw InvalidArgument("L(U,V) needs nonempty U and V");
  if (!is_connected(g)) throw PreconditionError("L(U,V) needs a connected graph");
  const auto d = distance_matrix(g);
  EventuallyPeriodicSet out;
  u.for_each([&](Node a) {
    v.for_each([&](Node b) { out = out | EventuallyPeriodicSet::progression(d[a][b], 2); });
  });
  return out;
}

namespace {

constexpr std::size_t kFrame = 256;
using Bits = std::bitset<kFrame>;

/// Return-time patterns of node pairs on positions 1..threshold+period.
struct PairPatterns {
  std::size_t n = 0;
  std::size_t threshold = 0;
  std::size_t period = 1;
  std::vector<Bits> pair;  // pair[u * n + v]

  Bits at(Node u, Node v) const { return pair[u * n + v]; }
  EventuallyPeriodicSet to_set(const Bits& b) const {
    std::vector<bool> prefix(threshold);
    std::vector<bool> residues(period);
    for (std::size_t i = 0; i < threshold; ++i) prefix[i] = b[i];
    for (std::size_t i = 0; i < period; ++i) residues[i] = b[threshold + i];
    return {std::move(prefix), std::move(residues)};
  }
};

PairPatterns walk_patterns(const PowerTrace& trace, std::size_t threshold, std::size_t period) {
  if (threshold + period > kFrame) throw GuardError("return-time frame exceeds 256 positions");
  PairPatterns p;
  p.n = trace.at(1).n();
  p.threshold = threshold;
  p.period = period;
  p.pair.assign(p.n * p.n, Bits{});
  for (std::size_t pos = 1; pos <= threshold + period; ++pos) {
    const BooleanRelation& r = trace.at(pos);
    for (Node u = 0; u < p.n; ++u) r.row(u).for_each([&](Node v) { p.pair[u * p.n + v].set(pos - 1); });
  }
  return p;
}

PairPatterns distance_patterns(const std::vector<std::vector<std::size_t>>& d, std::size_t threshold,
                               std::size_t period) {
  PairPatterns p;
  p.n = d.size();
  p.threshold = threshold;
  p.period = period;
  p.pair.assign(p.n * p.n, Bits{});
  for (Node u = 0; u < p.n; ++u) {
    for (Node v = 0; v < p.n; ++v) {
      for (std::size_t pos = std::max<std::size_t>(d[u][v], 1); pos <= threshold + period; ++pos) {
        if ((pos - d[u][v]) % 2 == 0) p.pair[u * p.n + v].set(pos - 1);
      }
    }
  }
  return p;
}

/// Calls visit(U, V, S(U,V)) for every pair of nonempty subsets, building the
/// unions incrementally from the lowest member.
void for_each_subset_pair(const PairPatterns& p, const std::function<void(std::uint64_t, std::uint64_t, const Bits&)>& visit) {
  const std::size_t n = p.n;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<Bits> rows(subsets * n);
  std::vector<Bits> cols(subsets);
  for (std::uint64_t u = 1; u < subsets; ++u) {
    const auto low = static_cast<Node>(std::countr_zero(u));
    const std::uint64_t rest = u & (u - 1);
    for (Node v = 0; v < n; ++v) rows[u * n + v] = rows[rest * n + v] | p.at(low, v);
    for (std::uint64_t w = 1; w < subsets; ++w) {
      const auto lw = static_cast<Node>(std::countr_zero(w));
      cols[w] = cols[w & (w - 1)] | rows[u * n + lw];
      visit(u, w, cols[w]);
    }
  }
}

std::vector<Bits> open_rows(const PairPatterns& p, const std::vector<NodeSet>& opens) {
  std::vector<Bits> rows(opens.size() * p.n);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    opens[i].for_each([&](Node u) {
      for (Node v = 0; v < p.n; ++v) rows[i * p.n + v] |= p.at(u, v);
    });
  }
  return rows;
}

Bits open_pair(const PairPatterns& p, const std::vector<Bits>& rows, std::size_t i, NodeSet v) {
  Bits out;
  v.for_each([&](Node b) { out |= rows[i * p.n + b]; });
  return out;
}

SCollection collect(const PairPatterns& p, const std::unordered_set<Bits>& distinct) {
  SCollection out;
  for (const Bits& b : distinct) out.sets.push_back(p.to_set(b));
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

void check_subset_guard(std::size_t n) {
  if (n > 10) throw GuardError("all-subsets enumeration limited to n <= 10; use sampling");
}

MoguceReport moguce_over(const SimpleGraph& g, const std::function<void(const PairPatterns&, const PairPatterns&,
                                                                        const std::function<void(NodeSet, NodeSet, const Bits&, const Bits&)>&)>& sweep) {
  if (!is_connected(g)) throw PreconditionError("the closed form for S(U,V) needs a connected graph");
  const PowerTrace trace(g.relation());
  const auto d = distance_matrix(g);
  const std::size_t threshold = std::max(trace.preperiod() - 1, diameter(g));
  const std::size_t period = std::lcm(trace.period(), std::size_t{2});
  // Both S and L are determined by positions 1..threshold+period of this common frame.
  const PairPatterns s = walk_patterns(trace, threshold, period);
  const PairPatterns l = distance_patterns(d, threshold, period);
  MoguceReport report;
  report.bipartite = is_bipartite(g);
  sweep(s, l, [&](NodeSet u, NodeSet v, const Bits& sb, const Bits& lb) {
    ++report.pairs_checked;
    const bool included = (lb & ~sb).none();
    const bool equal = sb == lb;
    if (!included) ++report.inclusion_violations;
    if (report.bipartite && !equal) ++report.equality_violations;
    if ((!included || (report.bipartite && !equal)) && !report.first_violation) report.first_violation = {u, v};
  });
  const bool ok = report.inclusion_violations == 0 && report.equality_violations == 0;
  report.verdict.status = ok ? Status::Yes : Status::No;
  report.verdict.note = report.bipartite ? "S(U,V) = L(U,V) checked" : "L(U,V) ⊆ S(U,V) checked";
  if (report.first_violation) {
    Refutation r;
    r.source = report.first_violation->first;
    r.targets = {report.first_violation->second};
    const Bits b = [&] {
      Bits out;
      report.first_violation->first.for_each([&](Node a) {
        report.first_violation->second.for_each([&](Node c) { out |= s.at(a, c); });
      });
      return out;
    }();
    r.set = s.to_set(b);
    report.verdict.refutation = r;
  }
  return report;
}

}  // namespace

MoguceReport verify_moguce(const SimpleGraph& g) {
  check_subset_guard(g.n());
  return moguce_over(g, [](const PairPatterns& s, const PairPatterns& l, const auto& visit) {
    const std::size_t n = s.n;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<Bits> srows(subsets * n), lrows(subsets * n);
    std::vector<Bits> scols(subsets), lcols(subsets);
    for (std::uint64_t u = 1; u < subsets; ++u) {
      const auto low = static_cast<Node>(std::countr_zero(u));
      const std::uint64_t rest = u & (u - 1);
      for (Node v = 0; v < n; ++v) {
        srows[u * n + v] = srows[rest * n + v] | s.at(low, v);
        lrows[u * n + v] = lrows[rest * n + v] | l.at(low, v);
      }
      for (std::uint64_t w = 1; w < subsets; ++w) {
        const auto lw = static_cast<Node>(std::countr_zero(w));
        scols[w] = scols[w & (w - 1)] | srows[u * n + lw];
        lcols[w] = lcols[w & (w - 1)] | lrows[u * n + lw];
        visit(NodeSet::from_bits(u), NodeSet::from_bits(w), scols[w], lcols[w]);
      }
    }
  });
}

MoguceReport verify_moguce(const SimpleGraph& g, const FiniteTopology& topo) {
  if (topo.n() != g.n()) throw InvalidArgument("topology and graph differ in node count");
  return moguce_over(g, [&](const PairPatterns& s, const PairPatterns& l, const auto& visit) {
    const auto opens = topo.nonempty_opens();
    const auto srows = open_rows(s, opens);
    const auto lrows = open_rows(l, opens);
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (NodeSet v : opens) visit(opens[i], v, open_pair(s, srows, i, v), open_pair(l, lrows, i, v));
    }
  });
}

SCollection s_collection(const BooleanRelation& rho) {
  check_subset_guard(rho.n());
  const PowerTrace trace(rho);
  const PairPatterns p = walk_patterns(trace, trace.preperiod() - 1, trace.period());
  std::unordered_set<Bits> distinct;
  for_each_subset_pair(p, [&](std::uint64_t, std::uint64_t, const Bits& b) { distinct.insert(b); });
  return collect(p, distinct);
}

SCollection s_collection(const BooleanRelation& rho, const FiniteTopology& topo) {
  if (topo.n() != rho.n()) throw InvalidArgument("topology and relation differ in node count");
  if (topo.is_discrete()) return s_collection(rho);
  const PowerTrace trace(rho);
  const PairPatterns p = walk_patterns(trace, trace.preperiod() - 1, trace.period());
  const auto opens = topo.nonempty_opens();
  const auto rows = open_rows(p, opens);
  std::unordered_set<Bits> distinct;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (NodeSet v : opens) distinct.insert(open_pair(p, rows, i, v));
  }
  return collect(p, distinct);
}

SCollection s_collection_sampled(const BooleanRelation& rho, std::size_t samples, std::uint64_t seed) {
  const RelationTuple t(rho);
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = NodeSet::full(rho.n()).bits();
  std::set<EventuallyPeriodicSet> distinct;
  for (std::size_t i = 0; i < samples; ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    while (u == 0) u = rng() & mask;
    while (v == 0) v = rng() & mask;
    distinct.insert(t.hit_set(NodeSet::from_bits(u), {NodeSet::from_bits(v)}));
  }
  SCollection out;
  out.sets.assign(distinct.begin(), distinct.end());
  out.lower_bound_only = true;
  return out;
}

std::size_t s_index(const SimpleGraph& g) { return s_collection(g.relation()).count(); }

std::size_t s_index(const SimpleGraph& g, const FiniteTopology& topo) {
  return s_collection(g.relation(), topo).count();
}

std::size_t bound_bipartite_value(std::size_t d) {
  const std::size_t numerator = d * d - (d % 2);
  if (numerator % 4 != 0) throw Error("bipartite bound is not an integer");
  return d + numerator / 4;
}

std::size_t bound_bipartite(const SimpleGraph& g) {
  const std::size_t d = diameter(g);
  if (d == kInfinite) throw PreconditionError("bipartite bound needs a connected graph");
  return bound_bipartite_value(d);
}

std::size_t path_s_formula(std::size_t n) {
  if (n < 2) throw InvalidArgument("path formula needs n >= 2");
  return bound_bipartite_value(n - 1);
}

std::size_t theta(const SimpleGraph& g, bool include_diagonal) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (Node u = 0; u < n; ++u) {
    // dist[v][parity]: shortest walk u -> v of that parity with length >= 1.
    std::vector<std::array<std::size_t, 2>> dist(n, {kInfinite, kInfinite});
    std::deque<std::pair<Node, int>> queue;
    g.neighbors(u).for_each([&](Node v) {
      dist[v][1] = 1;
      queue.emplace_back(v, 1);
    });
    while (!queue.empty()) {
      const auto [a, par] = queue.front();
      queue.pop_front();
      g.neighbors(a).for_each([&](Node b) {
        const int np = 1 - par;
        if (dist[b][np] == kInfinite) {
          dist[b][np] = dist[a][par] + 1;
          queue.emplace_back(b, np);
        }
      });
    }
    for (Node v = 0; v < n; ++v) {
      if (v == u && !include_diagonal) continue;
      if (dist[v][0] == kInfinite || dist[v][1] == kInfinite) return kInfinite;
      best = std::max({best, dist[v][0], dist[v][1]});
    }
  }
  return best;
}

std::size_t bound_theta(std::size_t theta_value) {
  if (theta_value == kInfinite) throw PreconditionError("theta bound needs a finite theta");
  return (theta_value + 1) * (theta_value + 1) / 4;
}

std::size_t theta_upper_odd_cycle(const SimpleGraph& g, const std::vector<Node>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3 || len % 2 == 0) throw InvalidArgument("contour must have odd length >= 3");
  NodeSet on_cycle;
  for (Node v : cycle) {
    if (v >= g.n() || on_cycle.contains(v)) throw InvalidArgument("contour nodes must be distinct and in range");
    on_cycle.insert(v);
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) throw InvalidArgument("contour uses a missing edge");
  }
  const auto d = distance_matrix(g);
  std::size_t best = 0;
  for (Node u = 0; u < g.n(); ++u) {
    std::size_t to_cycle = kInfinite;
    on_cycle.for_each([&](Node w) { to_cycle = std::min(to_cycle, d[u][w]); });
    for (Node v = 0; v < g.n(); ++v) {
      if (to_cycle == kInfinite || d[u][v] == kInfinite) return kInfinite;
      best = std::max(best, 2 * to_cycle + d[u][v] + len);
    }
  }
  return best;
}

namespace {

std::size_t pair_bit(std::size_t n, Node i, Node j) {
  if (i > j) std::swap(i, j);
  // Pair (0,1) is the most significant bit of the code.
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t index = i * n - i * (i + 1) / 2 + (j - i - 1);
  return pairs - 1 - index;
}

}  // namespace

std::uint64_t canonical_graph_code(const SimpleGraph& g) {
  const std::size_t n = g.n();
  const auto edges = g.edges();
  std::vector<std::size_t> degree(n);
  for (Node v = 0; v < n; ++v) degree[v] = g.neighbors(v).size();
  std::vector<std::size_t> slots(degree);
  std::sort(slots.begin(), slots.end(), std::greater<>());
  // Relabelings that list vertices by non-increasing degree; the set of such
  // relabelings is invariant under isomorphism, so the minimum is canonical.
  std::vector<Node> label(n);
  NodeSet used;
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> assign = [&](std::size_t slot) {
    if (slot == n) {
      std::uint64_t code = 0;
      for (auto [a, b] : edges) code |= std::uint64_t{1} << pair_bit(n, label[a], label[b]);
      best = std::min(best, code);
      return;
    }
    for (Node v = 0; v < n; ++v) {
      if (used.contains(v) || degree[v] != slots[slot]) continue;
      used.insert(v);
      label[v] = slot;
      assign(slot + 1);
      used.erase(v);
    }
  };
  assign(0);
  return best;
}

std::vector<SimpleGraph> graph_classes(std::size_t n) {
  if (n == 0) throw InvalidArgument("graphs need at least one node");
  if (n > 8) throw GuardError("graph class generation limited to n <= 8");
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::uint64_t, SimpleGraph> next;
    for (const SimpleGraph& base : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        SimpleGraph g(k);
        for (auto [a, b] : base.edges()) g.add_edge(a, b);
        NodeSet::from_bits(nb).for_each([&](Node v) { g.add_edge(v, k - 1); });
        next.emplace(canonical_graph_code(g), g);
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace hyperrel
