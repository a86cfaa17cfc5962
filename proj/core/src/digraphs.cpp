#include "hyperrel/digraphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "hyperrel/error.hpp"
#include "hyperrel/parallel.hpp"

namespace hyperrel {

Digraph::Digraph(std::size_t n) : out_(n) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("digraphs need 1..64 nodes");
}

Digraph Digraph::from_relation(const BooleanRelation& rho) {
  Digraph d(rho.n());
  for (Node i = 0; i < rho.n(); ++i) rho.row(i).for_each([&](Node j) { d.add_arc(i, j); });
  return d;
}

void Digraph::add_arc(Node i, Node j) {
  if (i >= n() || j >= n()) throw InvalidArgument("arc endpoint out of range");
  if (i == j) throw InvalidArgument("digraphs have no loops");
  out_[i].insert(j);
}

NodeSet Digraph::in_neighbors(Node v) const {
  NodeSet out;
  for (Node i = 0; i < n(); ++i) {
    if (out_[i].contains(v)) out.insert(i);
  }
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (NodeSet s : out_) total += s.size();
  return total;
}

namespace {

std::vector<std::size_t> directed_distances_from(const Digraph& d, Node s) {
  std::vector<std::size_t> dist(d.n(), kInfinite);
  dist[s] = 0;
  std::deque<Node> queue{s};
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    d.out_neighbors(u).for_each([&](Node v) {
      if (dist[v] == kInfinite) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

}  // namespace

std::size_t directed_diameter(const Digraph& d) {
  std::size_t best = 0;
  for (Node s = 0; s < d.n(); ++s) {
    for (std::size_t x : directed_distances_from(d, s)) best = std::max(best, x);
  }
  return best;
}

bool strongly_connected(const Digraph& d) { return directed_diameter(d) != kInfinite; }

SimpleGraph underlying(const Digraph& d) { return SimpleGraph::from_relation(d.relation()); }

bool weakly_connected(const Digraph& d) { return is_connected(underlying(d)); }

bool is_tournament(const Digraph& d) {
  for (Node i = 0; i < d.n(); ++i) {
    for (Node j = i + 1; j < d.n(); ++j) {
      if (d.has_arc(i, j) == d.has_arc(j, i)) return false;
    }
  }
  return true;
}

namespace {

std::optional<std::size_t> first_all_ones(const PowerTrace& trace) {
  for (std::size_t k = 1; k <= trace.powers().size(); ++k) {
    if (trace.at(k).is_all_ones()) return k;
  }
  return std::nullopt;
}

}  // namespace

bool is_primitive(const Digraph& d) { return first_all_ones(PowerTrace(d.relation())).has_value(); }

std::size_t exponent(const Digraph& d) {
  const auto e = first_all_ones(PowerTrace(d.relation()));
  if (!e) throw PreconditionError("digraph is not primitive");
  return *e;
}

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Relabeling tables for all n! permutations: for each permutation and each
/// pair index, the bit position the pair moves to and whether it flips.
class Canonizer {
 public:
  explicit Canonizer(std::size_t n) : n_(n), pairs_(pair_count(n)) {
    std::vector<Node> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Node, Node>> pair_nodes;
    for (Node i = 0; i < n; ++i) {
      for (Node j = i + 1; j < n; ++j) pair_nodes.emplace_back(i, j);
    }
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
    for (std::size_t k = 0; k < pairs_; ++k) {
      index[pair_nodes[k].first][pair_nodes[k].second] = k;
    }
    do {
      for (std::size_t k = 0; k < pairs_; ++k) {
        Node a = perm[pair_nodes[k].first];
        Node b = perm[pair_nodes[k].second];
        const bool flip = a > b;
        if (flip) std::swap(a, b);
        target_.push_back(static_cast<std::uint8_t>(pairs_ - 1 - index[a][b]));
        flip_.push_back(flip);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    perms_ = flip_.size() / std::max<std::size_t>(pairs_, 1);
    if (pairs_ == 0) perms_ = 1;
  }

  std::uint64_t relabel(std::uint64_t code, std::size_t perm) const {
    std::uint64_t out = 0;
    const std::size_t base = perm * pairs_;
    for (std::size_t k = 0; k < pairs_; ++k) {
      const bool bit = ((code >> (pairs_ - 1 - k)) & 1U) != 0;
      if (bit != static_cast<bool>(flip_[base + k])) out |= std::uint64_t{1} << target_[base + k];
    }
    return out;
  }

  std::uint64_t canonical(std::uint64_t code) const {
    std::uint64_t best = code;
    for (std::size_t p = 0; p < perms_; ++p) best = std::min(best, relabel(code, p));
    return best;
  }

  std::uint64_t automorphisms(std::uint64_t code) const {
    std::uint64_t count = 0;
    for (std::size_t p = 0; p < perms_; ++p) count += relabel(code, p) == code ? 1 : 0;
    return count;
  }

  std::size_t permutations() const { return perms_; }

 private:
  std::size_t n_;
  std::size_t pairs_;
  std::size_t perms_ = 0;
  std::vector<std::uint8_t> target_;
  std::vector<char> flip_;
};

void check_tournament_guard(std::size_t n) {
  if (n == 0) throw InvalidArgument("tournaments need at least one node");
  if (n > 7) throw GuardError("tournament enumeration limited to n <= 7");
}

}  // namespace

Digraph tournament_from_code(std::size_t n, std::uint64_t code) {
  Digraph t(n);
  std::size_t k = 0;
  const std::size_t pairs = pair_count(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j, ++k) {
      if ((code >> (pairs - 1 - k)) & 1U) {
        t.add_arc(i, j);
      } else {
        t.add_arc(j, i);
      }
    }
  }
  return t;
}

std::uint64_t tournament_code(const Digraph& t) {
  if (!is_tournament(t)) throw InvalidArgument("not a tournament");
  const std::size_t n = t.n();
  const std::size_t pairs = pair_count(n);
  std::uint64_t code = 0;
  std::size_t k = 0;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j, ++k) {
      if (t.has_arc(i, j)) code |= std::uint64_t{1} << (pairs - 1 - k);
    }
  }
  return code;
}

std::string code_string(std::size_t n, std::uint64_t code) {
  const std::size_t pairs = pair_count(n);
  std::string out(pairs, '0');
  for (std::size_t k = 0; k < pairs; ++k) {
    if ((code >> (pairs - 1 - k)) & 1U) out[k] = '1';
  }
  return out;
}

std::uint64_t canonical_tournament_code(const Digraph& t) {
  check_tournament_guard(t.n());
  return Canonizer(t.n()).canonical(tournament_code(t));
}

std::vector<TournamentClass> tournament_classes(std::size_t n) {
  check_tournament_guard(n);
  std::set<std::uint64_t> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    const Canonizer canon(k);
    std::set<std::uint64_t> next;
    for (std::uint64_t base : level) {
      const Digraph small = tournament_from_code(k - 1, base);
      for (std::uint64_t wins = 0; wins < (std::uint64_t{1} << (k - 1)); ++wins) {
        Digraph t(k);
        for (Node i = 0; i + 1 < k; ++i) small.out_neighbors(i).for_each([&](Node j) { t.add_arc(i, j); });
        for (Node i = 0; i + 1 < k; ++i) {
          if ((wins >> i) & 1U) {
            t.add_arc(i, k - 1);
          } else {
            t.add_arc(k - 1, i);
          }
        }
        next.insert(canon.canonical(tournament_code(t)));
      }
    }
    level = std::move(next);
  }
  const Canonizer canon(n);
  std::uint64_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  std::vector<TournamentClass> out;
  for (std::uint64_t code : level) {
    out.push_back({tournament_from_code(n, code), code, factorial / canon.automorphisms(code)});
  }
  return out;
}

void for_each_tournament(std::size_t n, const std::function<void(const Digraph&)>& f) {
  check_tournament_guard(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) f(tournament_from_code(n, code));
}

std::vector<Digraph> enumerate_tournaments(std::size_t n, bool up_to_iso) {
  std::vector<Digraph> out;
  if (up_to_iso) {
    for (auto& c : tournament_classes(n)) out.push_back(std::move(c.tournament));
  } else {
    for_each_tournament(n, [&](const Digraph& t) { out.push_back(t); });
  }
  return out;
}

std::vector<Node> redei_path(const Digraph& t) {
  if (!is_tournament(t)) throw InvalidArgument("Hamiltonian path construction needs a tournament");
  std::vector<Node> path{0};
  for (Node k = 1; k < t.n(); ++k) {
    if (t.has_arc(k, path.front())) {
      path.insert(path.begin(), k);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (t.has_arc(path[i], k) && t.has_arc(k, path[i + 1])) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, k);
        placed = true;
        break;
      }
    }
    if (!placed) path.push_back(k);
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!t.has_arc(path[i], path[i + 1])) throw Error("internal error: Hamiltonian path validation failed");
  }
  return path;
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Hypercyclic:
      return "hypercyclic";
    case Property::StronglyHypercyclic:
      return "strongly-hypercyclic";
    case Property::TopTransitive:
      return "transitive";
    case Property::StronglyTopTransitive:
      return "strongly-transitive";
  }
  return {};
}

namespace {

Verdict decide_tuple(Property p, const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  switch (p) {
    case Property::Hypercyclic:
      return is_hypercyclic(t, topo, f);
    case Property::StronglyHypercyclic:
      return is_strongly_hypercyclic(t, topo, f);
    case Property::TopTransitive:
      return is_top_transitive(t, topo, f);
    case Property::StronglyTopTransitive:
      return is_strongly_top_transitive(t, topo, f);
  }
  return {};
}

}  // namespace

Verdict decide(Property p, const std::vector<Digraph>& ds, const FiniteTopology& topo, const FamilySpec& f) {
  std::vector<BooleanRelation> rels;
  for (const auto& d : ds) rels.push_back(d.relation());
  return decide_tuple(p, RelationTuple(rels), topo, f);
}

WPropertyReport wproperty(Property p, const std::vector<Digraph>& ds, const FiniteTopology& topo,
                          const FamilySpec& f) {
  std::vector<BooleanRelation> rels;
  for (const auto& d : ds) rels.push_back(underlying(d).relation());
  WPropertyReport r;
  r.underlying = decide_tuple(p, RelationTuple(rels), topo, f);
  r.directed = decide(p, ds, topo, f);
  r.implication_holds = !(r.directed.yes() && r.underlying.no());
  return r;
}

namespace {

/// A member of F that misses {n : n >= e}, when one is easy to name.
std::optional<EventuallyPeriodicSet> member_without_tail(const FamilySpec& f, std::size_t e) {
  std::vector<EventuallyPeriodicSet> candidates;
  switch (f.kind()) {
    case FamilyKind::UpwardFrom:
    case FamilyKind::FiniteUnionsOf:
      candidates = f.generators();
      if (f.contains_empty()) candidates.push_back(EventuallyPeriodicSet::empty());
      break;
    case FamilyKind::AllNonempty:
    case FamilyKind::OddOnly:
      candidates.push_back(EventuallyPeriodicSet::finite({1}));
      break;
    case FamilyKind::AtLeast: {
      std::vector<std::size_t> first(f.parameter());
      std::iota(first.begin(), first.end(), 1);
      candidates.push_back(EventuallyPeriodicSet::finite(first));
      break;
    }
    case FamilyKind::Infinite:
    case FamilyKind::PositiveLowerDensity:
      candidates.push_back(EventuallyPeriodicSet::progression(2, 2));
      break;
    case FamilyKind::Cofinite:
      candidates.push_back(EventuallyPeriodicSet::cofinite({e}));
      break;
    case FamilyKind::Tail:
      candidates.push_back(EventuallyPeriodicSet::from_predicate(
          f.parameter(), 1, [&f](std::size_t k) { return k >= f.parameter(); }));
      break;
  }
  for (const auto& c : candidates) {
    if (f.contains(c) && !c.contains_tail_from(e)) return c;
  }
  return std::nullopt;
}

}  // namespace

IdiotReport idiot_check(const std::vector<Digraph>& ts, const FamilySpec& f) {
  if (ts.empty()) throw InvalidArgument("need at least one tournament");
  IdiotReport report;
  std::vector<BooleanRelation> rels;
  for (const auto& t : ts) {
    if (!is_tournament(t)) throw PreconditionError("member is not a tournament");
    if (!strongly_connected(t)) throw PreconditionError("member is not strongly connected");
    const PowerTrace trace(t.relation());
    const auto e = first_all_ones(trace);
    if (!e) throw PreconditionError("member is not primitive");
    report.exponents.push_back(*e);
    report.diameters.push_back(directed_diameter(t));
    report.exponent = std::max(report.exponent, *e);
    rels.push_back(t.relation());
    const std::size_t d = report.diameters.back();
    report.diameter_relation = report.diameter_relation && d <= *e && *e <= d + 3;
  }
  const std::size_t n = ts.front().n();
  // S(U,V) is monotone in U and V, so singleton pairs decide tail containment.
  for (const auto& r : rels) {
    const PowerTrace trace(r);
    for (Node u = 0; u < n; ++u) {
      for (Node v = 0; v < n; ++v) {
        if (!hit_set(trace, u, NodeSet::single(v)).contains_tail_from(report.exponent)) report.tails_contained = false;
      }
    }
  }
  const RelationTuple tuple(rels);
  std::vector<std::size_t> idx(ts.size(), 0);
  for (Node x = 0; x < n; ++x) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<NodeSet> w(ts.size());
      for (std::size_t j = 0; j < ts.size(); ++j) w[j] = NodeSet::single(idx[j]);
      if (!tuple.hit_set(x, w).contains_tail_from(report.exponent)) report.joint_tails_contained = false;
      std::size_t j = ts.size();
      bool done = true;
      while (j > 0) {
        --j;
        if (++idx[j] < n) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  }
  const FiniteTopology discrete = FiniteTopology::discrete(n);
  if (is_hypercyclic(tuple, discrete, f).yes()) report.family_member_without_tail = member_without_tail(f, report.exponent);
  const bool ok = report.tails_contained && report.joint_tails_contained && report.diameter_relation;
  report.verdict.status = ok ? Status::Yes : Status::No;
  report.verdict.note = "e=" + std::to_string(report.exponent);
  if (report.family_member_without_tail) {
    report.verdict.note += "; hypercyclic although " + render(*report.family_member_without_tail) +
                           " is in the family and misses the tail";
  }
  return report;
}

PendeConstruction build_pende_counterexample(std::size_t n, std::size_t count) {
  if (n < 5) throw InvalidArgument("the construction needs n >= 5");
  if (count < 2) throw InvalidArgument("the construction needs at least two tournaments");
  // 0-based: node 0 is x1.
  Digraph t1(n);
  for (Node i = 1; i < n; ++i) t1.add_arc(0, i);
  for (Node i = 2; i < n; ++i) t1.add_arc(1, i);
  t1.add_arc(2, 3);
  t1.add_arc(3, 4);
  t1.add_arc(4, 2);
  for (Node i = 5; i < n; ++i) {
    for (Node k = 2; k <= 4; ++k) t1.add_arc(k, i);
  }
  for (Node i = 5; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) t1.add_arc(i, j);
  }
  auto relabel = [](Node v) -> Node { return v == 1 ? 2 : v == 2 ? 1 : v; };
  Digraph t2(n);
  for (Node i = 0; i < n; ++i) t1.out_neighbors(i).for_each([&](Node j) { t2.add_arc(relabel(i), relabel(j)); });
  std::vector<Digraph> ts{t1};
  for (std::size_t k = 1; k < count; ++k) ts.push_back(t2);
  return {std::move(ts), FiniteTopology::validate(n, {NodeSet{}, NodeSet{1}, NodeSet{2}, NodeSet{1, 2}, NodeSet::full(n)})};
}

SurveyReport survey(std::size_t n, bool strong_only, std::size_t threads) {
  check_tournament_guard(n);
  auto classes = tournament_classes(n);
  if (strong_only) {
    std::erase_if(classes, [](const TournamentClass& c) { return !strongly_connected(c.tournament); });
  }
  SurveyReport report;
  report.n = n;
  report.rows = parallel_map<SurveyRow>(classes.size(), threads, [&](std::size_t i) {
    const TournamentClass& c = classes[i];
    SurveyRow row;
    row.code = c.code;
    row.sets = s_collection(c.tournament.relation()).sets;
    row.s_value = row.sets.size();
    const auto e = first_all_ones(PowerTrace(c.tournament.relation()));
    if (e) row.exponent = *e;
    row.strong = strongly_connected(c.tournament);
    row.labeled_count = c.labeled_count;
    return row;
  });
  std::set<std::size_t> values;
  for (const auto& r : report.rows) {
    values.insert(r.s_value);
    report.max_s = std::max(report.max_s, r.s_value);
  }
  report.values.assign(values.begin(), values.end());
  return report;
}

}  // namespace hyperrel
