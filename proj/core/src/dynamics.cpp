#include "hyperrel/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "hyperrel/error.hpp"

namespace hyperrel {

// ---------------------------------------------------------------------------
// RelationTuple

RelationTuple::RelationTuple(const BooleanRelation& rho) { build({RelationSequence::powers_of(rho)}); }

RelationTuple::RelationTuple(const std::vector<BooleanRelation>& rhos) {
  std::vector<RelationSequence> seqs;
  seqs.reserve(rhos.size());
  for (const auto& r : rhos) seqs.push_back(RelationSequence::powers_of(r));
  build(std::move(seqs));
}

RelationTuple::RelationTuple(RelationSequence seq) { build({std::move(seq)}); }

RelationTuple::RelationTuple(std::vector<RelationSequence> seqs) { build(std::move(seqs)); }

void RelationTuple::build(std::vector<RelationSequence> seqs) {
  if (seqs.empty()) throw InvalidArgument("relation tuple needs at least one sequence");
  for (const auto& s : seqs) {
    if (s.cycle.empty()) throw InvalidArgument("relation sequence needs a nonempty cycle");
  }
  arity_ = seqs.size();
  n_ = seqs.front().n();
  threshold_ = 0;
  period_ = 1;
  for (const auto& s : seqs) {
    for (const auto& r : s.prefix) {
      if (r.n() != n_) throw InvalidArgument("relation tuple members differ in node count");
    }
    for (const auto& r : s.cycle) {
      if (r.n() != n_) throw InvalidArgument("relation tuple members differ in node count");
    }
    threshold_ = std::max(threshold_, s.threshold());
    period_ = std::lcm(period_, s.period());
  }
  const std::size_t h = horizon();
  images_.assign(arity_ * h * n_, NodeSet{});
  domain_ = NodeSet::full(n_);
  for (std::size_t j = 0; j < arity_; ++j) {
    for (std::size_t pos = 1; pos <= h; ++pos) {
      const BooleanRelation& r = seqs[j].at(pos);
      for (Node x = 0; x < n_; ++x) {
        images_[(j * h + pos - 1) * n_ + x] = r.row(x);
        if (r.row(x).empty()) domain_.erase(x);
      }
    }
  }
}

NodeSet RelationTuple::image(std::size_t j, std::size_t pos, NodeSet u) const {
  NodeSet out;
  u.for_each([&](Node x) { out |= image(j, pos, x); });
  return out;
}

std::size_t RelationTuple::position(std::size_t n) const {
  if (n == 0) throw InvalidArgument("positions are indexed from 1");
  if (n <= threshold_) return n;
  return threshold_ + (n - threshold_ - 1) % period_ + 1;
}

namespace {

using Pattern = std::vector<bool>;
using Tuple = std::vector<NodeSet>;

EventuallyPeriodicSet to_set(const Pattern& p, std::size_t threshold) {
  return {Pattern(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(threshold)),
          Pattern(p.begin() + static_cast<std::ptrdiff_t>(threshold), p.end())};
}

bool tuple_hit(const RelationTuple& t, std::size_t pos, Node x, const Tuple& w) {
  for (std::size_t j = 0; j < t.arity(); ++j) {
    if (!t.image(j, pos, x).intersects(w[j])) return false;
  }
  return true;
}

Pattern point_pattern(const RelationTuple& t, Node x, const Tuple& w) {
  Pattern p(t.horizon());
  for (std::size_t pos = 1; pos <= t.horizon(); ++pos) p[pos - 1] = tuple_hit(t, pos, x, w);
  return p;
}

Pattern source_pattern(const RelationTuple& t, NodeSet u, const Tuple& w) {
  Pattern p(t.horizon());
  for (std::size_t pos = 1; pos <= t.horizon(); ++pos) {
    bool hit = false;
    u.for_each([&](Node x) { hit = hit || tuple_hit(t, pos, x, w); });
    p[pos - 1] = hit;
  }
  return p;
}

bool admits(const FamilySpec& f, const Pattern& p, std::size_t threshold) {
  if (f.kind() == FamilyKind::AllNonempty) return std::find(p.begin(), p.end(), true) != p.end();
  return f.contains(to_set(p, threshold));
}

std::vector<Tuple> tuples_over(const std::vector<NodeSet>& base, std::size_t arity) {
  std::vector<Tuple> out;
  if (base.empty()) return out;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    Tuple t(arity);
    for (std::size_t j = 0; j < arity; ++j) t[j] = base[idx[j]];
    out.push_back(std::move(t));
    std::size_t j = arity;
    while (j > 0) {
      --j;
      if (++idx[j] < base.size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

/// Targets whose return-time sets decide membership: minimal opens suffice
/// when the family is closed under supersets.
std::vector<NodeSet> target_base(const FiniteTopology& topo, const FamilySpec& f) {
  return f.upward_closed() ? topo.minimal_opens() : topo.nonempty_opens();
}

void check_sizes(const RelationTuple& t, const FiniteTopology& topo) {
  if (t.n() != topo.n()) throw InvalidArgument("topology and relation differ in node count");
}

Refutation point_refutation(Node x, Tuple w, EventuallyPeriodicSet s) {
  Refutation r;
  r.point = x;
  r.targets = std::move(w);
  r.set = std::move(s);
  return r;
}

Refutation source_refutation(NodeSet u, Tuple w, EventuallyPeriodicSet s) {
  Refutation r;
  r.source = u;
  r.targets = std::move(w);
  r.set = std::move(s);
  return r;
}

// ---------------------------------------------------------------------------
// Selection search: choose y_{j,n} ∈ ρ_{j,n}(source) so that every tuple of
// nonempty opens is visited on a set in F.

class SelectionSolver {
 public:
  SelectionSolver(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f, NodeSet source)
      : t_(t), topo_(topo), f_(f), source_(source), avail_(t.arity() * t.horizon()) {
    for (std::size_t j = 0; j < t.arity(); ++j) {
      for (std::size_t pos = 1; pos <= t.horizon(); ++pos) avail_[index(j, pos)] = t.image(j, pos, source);
    }
  }

  Verdict solve() {
    for (std::size_t pos = 1; pos <= t_.horizon(); ++pos) {
      for (std::size_t j = 0; j < t_.arity(); ++j) {
        if (avail(j, pos).empty()) {
          return no("empty image at n=" + std::to_string(pos) + (t_.arity() > 1 ? " in relation " + std::to_string(j + 1) : ""));
        }
      }
    }
    if (!f_.contains_naturals()) {
      Verdict v = no("N is not in the family, and the tuple of full sets is visited at every n");
      v.refutation = make_refutation(Tuple(t_.arity(), topo_.ground()), EventuallyPeriodicSet::naturals());
      return v;
    }
    if (topo_.is_antidiscrete()) return yes(default_schedule(), "only the full set is open");
    if (f_.upward_closed()) return solve_upward_closed();
    return solve_general();
  }

 private:
  std::size_t index(std::size_t j, std::size_t pos) const { return j * t_.horizon() + pos - 1; }
  NodeSet avail(std::size_t j, std::size_t pos) const { return avail_[index(j, pos)]; }

  Verdict no(std::string note) const {
    Verdict v;
    v.status = Status::No;
    v.note = std::move(note);
    return v;
  }

  Verdict yes(SelectionSchedule s, std::string note = {}) const {
    Verdict v;
    v.status = Status::Yes;
    v.selection = std::move(s);
    v.note = std::move(note);
    return v;
  }

  Refutation make_refutation(Tuple w, EventuallyPeriodicSet s) const {
    if (source_.size() == 1) return point_refutation(source_.first(), std::move(w), std::move(s));
    return source_refutation(source_, std::move(w), std::move(s));
  }

  std::vector<Node> default_choice(std::size_t pos) const {
    std::vector<Node> out(t_.arity());
    for (std::size_t j = 0; j < t_.arity(); ++j) out[j] = avail(j, pos).first();
    return out;
  }

  std::vector<Node> choice_in(std::size_t pos, const Tuple& box) const {
    std::vector<Node> out(t_.arity());
    for (std::size_t j = 0; j < t_.arity(); ++j) out[j] = (avail(j, pos) & box[j]).first();
    return out;
  }

  bool servable(std::size_t pos, const Tuple& box) const {
    for (std::size_t j = 0; j < t_.arity(); ++j) {
      if (!avail(j, pos).intersects(box[j])) return false;
    }
    return true;
  }

  Pattern can_pattern(const Tuple& box) const {
    Pattern p(t_.horizon());
    for (std::size_t pos = 1; pos <= t_.horizon(); ++pos) p[pos - 1] = servable(pos, box);
    return p;
  }

  Pattern must_pattern(const Tuple& box) const {
    Pattern p(t_.horizon());
    for (std::size_t pos = 1; pos <= t_.horizon(); ++pos) {
      bool all = true;
      for (std::size_t j = 0; j < t_.arity() && all; ++j) all = avail(j, pos).is_subset_of(box[j]);
      p[pos - 1] = all;
    }
    return p;
  }

  SelectionSchedule default_schedule() const {
    SelectionSchedule s;
    for (std::size_t pos = 1; pos <= t_.threshold(); ++pos) s.head.push_back(default_choice(pos));
    for (std::size_t pos = t_.threshold() + 1; pos <= t_.horizon(); ++pos) s.tail.push_back(default_choice(pos));
    return s;
  }

  /// Schedule over a frame (threshold, period) that are multiples/extensions of
  /// the tuple's own frame; `pick(n)` returns the box to serve at n, if any.
  SelectionSchedule schedule_from(std::size_t threshold, std::size_t period,
                                  const std::function<const Tuple*(std::size_t)>& pick) const {
    SelectionSchedule s;
    for (std::size_t n = 1; n <= threshold + period; ++n) {
      const std::size_t pos = t_.position(n);
      const Tuple* box = pick(n);
      auto choice = box != nullptr ? choice_in(pos, *box) : default_choice(pos);
      (n <= threshold ? s.head : s.tail).push_back(std::move(choice));
    }
    return s;
  }

  Verdict solve_upward_closed() {
    const auto boxes = tuples_over(topo_.minimal_opens(), t_.arity());
    std::vector<Pattern> can;
    can.reserve(boxes.size());
    for (const auto& b : boxes) can.push_back(can_pattern(b));
    if (boxes.size() == 1) {
      auto s = to_set(can[0], t_.threshold());
      if (!f_.contains(s)) {
        Verdict v = no("the only minimal target is reachable on a set outside the family");
        v.refutation = make_refutation(boxes[0], s);
        return v;
      }
      const Tuple& box = boxes[0];
      return yes(schedule_from(t_.threshold(), t_.period(), [&](std::size_t n) -> const Tuple* {
        return servable(t_.position(n), box) ? &box : nullptr;
      }));
    }
    switch (f_.kind()) {
      case FamilyKind::AllNonempty:
        return solve_demand(boxes, can, 1);
      case FamilyKind::AtLeast:
        return solve_demand(boxes, can, f_.parameter());
      case FamilyKind::Infinite:
      case FamilyKind::PositiveLowerDensity:
        return solve_demand(boxes, can, kUnbounded);
      case FamilyKind::Tail:
      case FamilyKind::Cofinite:
        return no("disjoint minimal targets cannot both be visited on a cofinite set");
      case FamilyKind::UpwardFrom:
        return solve_generators(boxes, can);
      default:
        break;
    }
    return solve_general();
  }

  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  /// Every box needs `demand` distinct visits (kUnbounded: infinitely many, on a
  /// set of positive density). Boxes reachable at some periodic position are
  /// served in the tail, one block of length period() each; the others compete
  /// for head positions, resolved by bipartite matching.
  Verdict solve_demand(const std::vector<Tuple>& boxes, const std::vector<Pattern>& can, std::size_t demand) {
    if (demand == 0) return yes(default_schedule());
    const std::size_t head = t_.threshold();
    const std::size_t p = t_.period();
    std::vector<std::size_t> free_boxes;
    std::vector<std::size_t> fixed_boxes;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      const bool periodic = std::find(can[b].begin() + static_cast<std::ptrdiff_t>(head), can[b].end(), true) != can[b].end();
      (periodic ? free_boxes : fixed_boxes).push_back(b);
    }
    std::vector<std::size_t> owner(head, kUnbounded);
    if (!fixed_boxes.empty()) {
      if (demand == kUnbounded) {
        Verdict v = no("a minimal target is reachable only finitely often");
        v.refutation = make_refutation(boxes[fixed_boxes[0]], to_set(can[fixed_boxes[0]], head));
        return v;
      }
      // Left vertices: (box, copy); right vertices: head positions.
      std::vector<std::size_t> match(head, kUnbounded);
      std::vector<char> seen(head);
      std::function<bool(std::size_t)> augment = [&](std::size_t box) -> bool {
        for (std::size_t i = 0; i < head; ++i) {
          if (!can[box][i] || seen[i]) continue;
          seen[i] = 1;
          if (match[i] == kUnbounded || augment(match[i])) {
            match[i] = box;
            return true;
          }
        }
        return false;
      };
      for (std::size_t b : fixed_boxes) {
        for (std::size_t copy = 0; copy < demand; ++copy) {
          std::fill(seen.begin(), seen.end(), 0);
          if (!augment(b)) {
            Verdict v = no("minimal targets compete for the same finitely many steps");
            v.refutation = make_refutation(boxes[b], to_set(can[b], head));
            return v;
          }
        }
      }
      owner = match;
    }
    const std::size_t blocks = std::max<std::size_t>(1, free_boxes.size());
    std::vector<const Tuple*> tail_pick(blocks * p, nullptr);
    for (std::size_t i = 0; i < free_boxes.size(); ++i) {
      const std::size_t b = free_boxes[i];
      for (std::size_t r = 0; r < p; ++r) {
        if (can[b][head + r]) {
          tail_pick[i * p + r] = &boxes[b];
          break;
        }
      }
    }
    return yes(schedule_from(head, blocks * p, [&](std::size_t n) -> const Tuple* {
      if (n <= head) return owner[n - 1] == kUnbounded ? nullptr : &boxes[owner[n - 1]];
      return tail_pick[n - head - 1];
    }));
  }

  /// Each box must be visited on a superset of some generator; visits of
  /// distinct minimal boxes are disjoint, so pick pairwise disjoint generators.
  Verdict solve_generators(const std::vector<Tuple>& boxes, const std::vector<Pattern>& can) {
    const auto& gens = f_.generators();
    std::vector<std::vector<std::size_t>> options(boxes.size());
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      const auto reach = to_set(can[b], t_.threshold());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].is_subset_of(reach)) options[b].push_back(g);
      }
      if (options[b].empty()) {
        Verdict v = no("a minimal target is reachable on no superset of a generator");
        v.refutation = make_refutation(boxes[b], reach);
        return v;
      }
    }
    std::vector<std::size_t> order(boxes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return options[a].size() < options[b].size(); });
    std::vector<std::size_t> chosen(boxes.size());
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
      if (k == order.size()) return true;
      const std::size_t b = order[k];
      for (std::size_t g : options[b]) {
        bool disjoint = true;
        for (std::size_t i = 0; i < k && disjoint; ++i) {
          disjoint = (gens[chosen[order[i]]] & gens[g]).is_empty();
        }
        if (!disjoint) continue;
        chosen[b] = g;
        if (place(k + 1)) return true;
      }
      return false;
    };
    if (!place(0)) return no("no pairwise disjoint choice of generators fits the minimal targets");
    std::size_t threshold = t_.threshold();
    std::size_t period = t_.period();
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      threshold = std::max(threshold, gens[chosen[b]].threshold());
      period = std::lcm(period, gens[chosen[b]].period());
    }
    return yes(schedule_from(threshold, period, [&](std::size_t n) -> const Tuple* {
      for (std::size_t b = 0; b < boxes.size(); ++b) {
        if (gens[chosen[b]].contains(n)) return &boxes[b];
      }
      return nullptr;
    }));
  }

  /// Families not closed under supersets: every tuple of nonempty opens must be
  /// checked. Each tuple alone needs an F-member between its forced and its
  /// reachable visit sets; a joint selection is then searched among eventually
  /// periodic schedules, which is conclusive only when one is found.
  Verdict solve_general() {
    const auto all = tuples_over(topo_.nonempty_opens(), t_.arity());
    for (const auto& w : all) {
      const auto lower = to_set(must_pattern(w), t_.threshold());
      const auto upper = to_set(can_pattern(w), t_.threshold());
      if (!member_between(f_, lower, upper)) {
        Verdict v = no("no family member lies between the forced and the reachable visits");
        v.refutation = make_refutation(w, upper);
        return v;
      }
    }
    // Points with the same minimal neighborhood lie in the same opens.
    std::vector<std::vector<std::vector<Node>>> options(t_.horizon());
    for (std::size_t pos = 1; pos <= t_.horizon(); ++pos) {
      std::vector<std::vector<Node>> per_coord(t_.arity());
      for (std::size_t j = 0; j < t_.arity(); ++j) {
        std::vector<NodeSet> seen;
        avail(j, pos).for_each([&](Node v) {
          const NodeSet nb = topo_.neighborhood(v);
          if (std::find(seen.begin(), seen.end(), nb) == seen.end()) {
            seen.push_back(nb);
            per_coord[j].push_back(v);
          }
        });
      }
      std::vector<std::size_t> idx(t_.arity(), 0);
      while (true) {
        std::vector<Node> c(t_.arity());
        for (std::size_t j = 0; j < t_.arity(); ++j) c[j] = per_coord[j][idx[j]];
        options[pos - 1].push_back(std::move(c));
        std::size_t j = t_.arity();
        bool done = true;
        while (j > 0) {
          --j;
          if (++idx[j] < per_coord[j].size()) {
            done = false;
            break;
          }
          idx[j] = 0;
        }
        if (done) break;
      }
    }
    constexpr std::size_t kBudget = 20000;
    std::size_t leaves = 0;
    for (std::size_t blocks = 1; blocks <= 2 && leaves < kBudget; ++blocks) {
      const std::size_t head = t_.threshold();
      const std::size_t length = head + blocks * t_.period();
      std::vector<std::vector<Node>> picks(length);
      std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (leaves >= kBudget) return false;
        if (i == length) {
          ++leaves;
          for (const auto& w : all) {
            Pattern p(length);
            for (std::size_t k = 0; k < length; ++k) {
              bool in = true;
              for (std::size_t j = 0; j < t_.arity() && in; ++j) in = w[j].contains(picks[k][j]);
              p[k] = in;
            }
            if (!f_.contains(to_set(p, head))) return false;
          }
          return true;
        }
        for (const auto& c : options[t_.position(i + 1) - 1]) {
          picks[i] = c;
          if (dfs(i + 1)) return true;
        }
        return false;
      };
      if (dfs(0)) {
        SelectionSchedule s;
        s.head.assign(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(head));
        s.tail.assign(picks.begin() + static_cast<std::ptrdiff_t>(head), picks.end());
        return yes(std::move(s));
      }
    }
    Verdict v;
    v.status = Status::Unknown;
    v.note = "bounded search over eventually periodic selections found none";
    return v;
  }

  const RelationTuple& t_;
  const FiniteTopology& topo_;
  const FamilySpec& f_;
  NodeSet source_;
  std::vector<NodeSet> avail_;
};

}  // namespace

EventuallyPeriodicSet RelationTuple::hit_set(Node x, const std::vector<NodeSet>& targets) const {
  if (targets.size() != arity_) throw InvalidArgument("need one target set per relation");
  return to_set(point_pattern(*this, x, targets), threshold_);
}

EventuallyPeriodicSet RelationTuple::hit_set(NodeSet u, const std::vector<NodeSet>& targets) const {
  if (targets.size() != arity_) throw InvalidArgument("need one target set per relation");
  return to_set(source_pattern(*this, u, targets), threshold_);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes:
      return "Yes";
    case Status::No:
      return "No";
    case Status::Unknown:
      return "Unknown";
  }
  return {};
}

const std::vector<Node>& SelectionSchedule::at(std::size_t n) const {
  if (n == 0) throw InvalidArgument("selections are indexed from 1");
  if (n <= head.size()) return head[n - 1];
  return tail[(n - head.size() - 1) % tail.size()];
}

std::string render(const Refutation& r) {
  std::string out = "(";
  if (r.point) {
    out += node_name(*r.point) + ";";
  } else if (r.source) {
    out += to_string(*r.source) + ";";
  }
  for (std::size_t j = 0; j < r.targets.size(); ++j) {
    if (j > 0) out += ',';
    out += to_string(r.targets[j]);
  }
  return out + "):" + render(r.set);
}

NodeSet hypercyclic_vectors(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  check_sizes(t, topo);
  const auto targets = tuples_over(target_base(topo, f), t.arity());
  NodeSet out;
  t.domain().for_each([&](Node x) {
    for (const auto& w : targets) {
      if (!admits(f, point_pattern(t, x, w), t.threshold())) return;
    }
    out.insert(x);
  });
  return out;
}

Verdict is_hypercyclic(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  const NodeSet vectors = hypercyclic_vectors(t, topo, f);
  Verdict v;
  if (!vectors.empty()) {
    v.status = Status::Yes;
    v.witness = vectors.first();
    return v;
  }
  v.status = Status::No;
  if (t.domain().empty()) {
    v.note = "no point lies in the domain of every iterate";
    return v;
  }
  const Node x = t.domain().first();
  for (const auto& w : tuples_over(target_base(topo, f), t.arity())) {
    auto s = t.hit_set(x, w);
    if (!f.contains(s)) {
      v.refutation = point_refutation(x, w, std::move(s));
      break;
    }
  }
  v.note = "no hypercyclic vector";
  return v;
}

Verdict is_top_transitive(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  check_sizes(t, topo);
  const auto base = target_base(topo, f);
  const auto targets = tuples_over(base, t.arity());
  for (NodeSet u : base) {
    for (const auto& w : targets) {
      const Pattern p = source_pattern(t, u, w);
      if (!admits(f, p, t.threshold())) {
        Verdict v;
        v.status = Status::No;
        v.refutation = source_refutation(u, w, to_set(p, t.threshold()));
        return v;
      }
    }
  }
  Verdict v;
  v.status = Status::Yes;
  return v;
}

Verdict strong_hypercyclic_vector(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f, Node x) {
  check_sizes(t, topo);
  if (x >= t.n()) throw InvalidArgument("node out of range");
  if (!t.domain().contains(x)) {
    Verdict v;
    v.status = Status::No;
    v.note = node_name(x) + " is not in the domain of every iterate";
    return v;
  }
  Verdict v = SelectionSolver(t, topo, f, NodeSet::single(x)).solve();
  if (v.yes()) v.witness = x;
  return v;
}

StrongVectors strong_hypercyclic_vectors(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  StrongVectors out;
  out.per_node.reserve(t.n());
  for (Node x = 0; x < t.n(); ++x) {
    out.per_node.push_back(strong_hypercyclic_vector(t, topo, f, x));
    if (out.per_node.back().yes()) out.yes.insert(x);
    if (out.per_node.back().status == Status::Unknown) out.unknown.insert(x);
  }
  return out;
}

Verdict is_strongly_hypercyclic(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  StrongVectors all = strong_hypercyclic_vectors(t, topo, f);
  if (!all.yes.empty()) return all.per_node[all.yes.first()];
  Verdict v;
  if (!all.unknown.empty()) {
    v.status = Status::Unknown;
    v.note = "undecided for " + to_string(all.unknown);
    return v;
  }
  v.status = Status::No;
  if (t.domain().empty()) {
    v.note = "no point lies in the domain of every iterate";
  } else {
    const Verdict& first = all.per_node[t.domain().first()];
    v.refutation = first.refutation;
    v.note = first.note;
  }
  return v;
}

Verdict is_strongly_top_transitive(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  check_sizes(t, topo);
  // A selection for a smaller U also serves any larger U, so minimal opens suffice.
  bool unknown = false;
  if (t.arity() == 1) {
    for (NodeSet u : topo.minimal_opens()) {
      Verdict v = SelectionSolver(t, topo, f, u).solve();
      if (v.no()) {
        if (!v.refutation) v.refutation = source_refutation(u, {}, EventuallyPeriodicSet::empty());
        v.refutation->point.reset();
        v.refutation->source = u;
        return v;
      }
      unknown = unknown || v.status == Status::Unknown;
    }
  } else {
    const auto targets = tuples_over(target_base(topo, f), t.arity());
    for (NodeSet u : topo.minimal_opens()) {
      const NodeSet candidates = u & t.domain();
      for (const auto& w : targets) {
        bool found = false;
        candidates.for_each([&](Node x) {
          if (found) return;
          Pattern must(t.horizon());
          Pattern can(t.horizon());
          for (std::size_t pos = 1; pos <= t.horizon(); ++pos) {
            bool all_in = true;
            bool all_meet = true;
            for (std::size_t j = 0; j < t.arity(); ++j) {
              all_in = all_in && t.image(j, pos, x).is_subset_of(w[j]);
              all_meet = all_meet && t.image(j, pos, x).intersects(w[j]);
            }
            must[pos - 1] = all_in;
            can[pos - 1] = all_meet;
          }
          found = member_between(f, to_set(must, t.threshold()), to_set(can, t.threshold())).has_value();
        });
        if (!found) {
          Verdict v;
          v.status = Status::No;
          v.refutation = source_refutation(u, w, t.hit_set(candidates, w));
          v.note = candidates.empty() ? "no point of the source lies in the domain of every iterate"
                                      : "no point of the source admits a selection";
          return v;
        }
      }
    }
  }
  Verdict v;
  v.status = unknown ? Status::Unknown : Status::Yes;
  if (unknown) v.note = "bounded search inconclusive for some open set";
  return v;
}

bool selection_is_valid(const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f, NodeSet source,
                        const SelectionSchedule& schedule) {
  check_sizes(t, topo);
  if (schedule.tail.empty()) return false;
  const std::size_t threshold = std::max(t.threshold(), schedule.threshold());
  const std::size_t period = std::lcm(t.period(), schedule.period());
  const std::size_t length = threshold + period;
  for (std::size_t n = 1; n <= length; ++n) {
    const auto& y = schedule.at(n);
    if (y.size() != t.arity()) return false;
    for (std::size_t j = 0; j < t.arity(); ++j) {
      if (!t.image(j, t.position(n), source).contains(y[j])) return false;
    }
  }
  for (const auto& w : tuples_over(topo.nonempty_opens(), t.arity())) {
    Pattern p(length);
    for (std::size_t n = 1; n <= length; ++n) {
      const auto& y = schedule.at(n);
      bool in = true;
      for (std::size_t j = 0; j < t.arity() && in; ++j) in = w[j].contains(y[j]);
      p[n - 1] = in;
    }
    if (!f.contains(to_set(p, threshold))) return false;
  }
  return true;
}

std::optional<EventuallyPeriodicSet> member_between(const FamilySpec& f, const EventuallyPeriodicSet& lower,
                                                    const EventuallyPeriodicSet& upper) {
  if (!lower.is_subset_of(upper)) return std::nullopt;
  switch (f.kind()) {
    case FamilyKind::FiniteUnionsOf: {
      EventuallyPeriodicSet best;
      for (const auto& g : f.generators()) {
        if (g.is_subset_of(upper)) best = best | g;
      }
      if (!lower.is_subset_of(best)) return std::nullopt;
      if (best.is_empty() && !f.contains_empty()) return std::nullopt;
      return best;
    }
    case FamilyKind::OddOnly: {
      const auto odds = EventuallyPeriodicSet::progression(1, 2);
      if (!lower.is_subset_of(odds)) return std::nullopt;
      auto h = upper & odds;
      if (h.is_empty()) return std::nullopt;
      return h;
    }
    default:
      break;
  }
  if (f.contains(upper)) return upper;
  return std::nullopt;
}

ShiftTransferReport check_shift_transfer(const BooleanRelation& rho, const FiniteTopology& topo, const FamilySpec& f,
                                         Node z, std::size_t l) {
  if (l == 0) throw PreconditionError("shift transfer needs l >= 1");
  if (z >= rho.n()) throw InvalidArgument("node out of range");
  const RelationTuple t(rho);
  check_sizes(t, topo);
  ShiftTransferReport report;
  const NodeSet reached = power(rho, l).row(z);
  const NodeSet vectors = hypercyclic_vectors(t, topo, f);
  report.premise = reached.intersects(vectors);
  bool strong_unknown = false;
  reached.for_each([&](Node x) {
    const Status s = strong_hypercyclic_vector(t, topo, f, x).status;
    if (s == Status::Yes) report.strong_premise = Status::Yes;
    strong_unknown = strong_unknown || s == Status::Unknown;
  });
  if (report.strong_premise != Status::Yes && strong_unknown) report.strong_premise = Status::Unknown;

  report.hypothesis = true;
  const NodeSet omegas = t.domain();
  for (NodeSet v : topo.nonempty_opens()) {
    omegas.for_each([&](Node w) {
      if (!report.hypothesis) return;
      const auto s = t.hit_set(w, Tuple{v});
      if (f.contains(shift_down(s, l)) && !f.contains(s)) report.hypothesis = false;
    });
    if (!report.hypothesis) break;
  }
  report.conclusion = vectors.contains(z);
  report.strong_conclusion = strong_hypercyclic_vector(t, topo, f, z).status;

  Verdict& v = report.verdict;
  v.witness = z;
  if (!report.premise || !report.hypothesis) {
    v.status = Status::Yes;
    v.note = report.hypothesis ? "premise does not hold" : "shift hypothesis fails on this instance";
  } else if (report.conclusion) {
    v.status = Status::Yes;
    v.note = "conclusion holds";
  } else {
    v.status = Status::No;
    v.note = "premise and hypothesis hold but " + node_name(z) + " is not hypercyclic";
  }
  return report;
}

}  // namespace hyperrel
