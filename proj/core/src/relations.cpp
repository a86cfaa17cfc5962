#include "hyperrel/relations.hpp"

#include <algorithm>
#include <unordered_map>

#include "hyperrel/error.hpp"

namespace hyperrel {

BooleanRelation::BooleanRelation(std::size_t n) : rows_(n) {
  if (n > kMaxNodes) throw InvalidArgument("relations support at most 64 nodes");
}

BooleanRelation::BooleanRelation(std::size_t n, std::initializer_list<std::pair<Node, Node>> pairs)
    : BooleanRelation(n) {
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw InvalidArgument("relation pair out of range");
    insert(i, j);
  }
}

BooleanRelation BooleanRelation::identity(std::size_t n) {
  BooleanRelation r(n);
  for (Node i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

BooleanRelation BooleanRelation::from_rows(std::vector<NodeSet> rows) {
  BooleanRelation r(rows.size());
  const NodeSet full = NodeSet::full(rows.size());
  for (NodeSet row : rows) {
    if (!row.is_subset_of(full)) throw InvalidArgument("relation row out of range");
  }
  r.rows_ = std::move(rows);
  return r;
}

std::size_t BooleanRelation::size() const {
  std::size_t total = 0;
  for (NodeSet r : rows_) total += r.size();
  return total;
}

bool BooleanRelation::is_all_ones() const {
  const NodeSet full = NodeSet::full(n());
  return std::all_of(rows_.begin(), rows_.end(), [&](NodeSet r) { return r == full; });
}

BooleanRelation BooleanRelation::inverse() const {
  BooleanRelation out(n());
  for (Node i = 0; i < n(); ++i) rows_[i].for_each([&](Node j) { out.insert(j, i); });
  return out;
}

NodeSet BooleanRelation::image(NodeSet s) const {
  NodeSet out;
  s.for_each([&](Node i) { out |= rows_[i]; });
  return out;
}

NodeSet BooleanRelation::domain() const {
  NodeSet out;
  for (Node i = 0; i < n(); ++i) {
    if (!rows_[i].empty()) out.insert(i);
  }
  return out;
}

NodeSet BooleanRelation::range() const {
  NodeSet out;
  for (NodeSet r : rows_) out |= r;
  return out;
}

BooleanRelation BooleanRelation::restrict_rows(NodeSet keep) const {
  BooleanRelation out = *this;
  for (Node i = 0; i < n(); ++i) {
    if (!keep.contains(i)) out.rows_[i] = NodeSet{};
  }
  return out;
}

BooleanRelation compose(const BooleanRelation& sigma, const BooleanRelation& rho) {
  if (sigma.n() != rho.n()) throw InvalidArgument("relation size mismatch in composition");
  std::vector<NodeSet> rows(rho.n());
  for (Node i = 0; i < rho.n(); ++i) rows[i] = sigma.image(rho.row(i));
  return BooleanRelation::from_rows(std::move(rows));
}

BooleanRelation power(const BooleanRelation& rho, std::size_t k) {
  BooleanRelation result = BooleanRelation::identity(rho.n());
  BooleanRelation base = rho;
  while (k > 0) {
    if (k & 1U) result = compose(base, result);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::size_t BooleanRelationHash::operator()(const BooleanRelation& r) const noexcept {
  std::size_t h = r.n();
  for (NodeSet row : r.rows()) h = h * 0x9E3779B97F4A7C15ULL + row.bits() + (h >> 17);
  return h;
}

PowerTrace::PowerTrace(const BooleanRelation& rho) {
  std::unordered_map<BooleanRelation, std::size_t, BooleanRelationHash> seen;
  BooleanRelation current = rho;
  for (std::size_t k = 1;; ++k) {
    auto [it, inserted] = seen.emplace(current, k);
    if (!inserted) {
      preperiod_ = it->second;
      period_ = k - it->second;
      break;
    }
    powers_.push_back(current);
    current = compose(rho, current);
  }
}

const BooleanRelation& PowerTrace::at(std::size_t k) const {
  if (k == 0) throw InvalidArgument("power trace starts at exponent 1");
  if (k <= powers_.size()) return powers_[k - 1];
  return powers_[preperiod_ - 1 + (k - preperiod_) % period_];
}

RelationSequence RelationSequence::powers_of(const BooleanRelation& rho) { return powers_of(PowerTrace(rho)); }

RelationSequence RelationSequence::powers_of(const PowerTrace& trace) {
  const auto& p = trace.powers();
  const auto split = p.begin() + static_cast<std::ptrdiff_t>(trace.preperiod() - 1);
  return {{p.begin(), split}, {split, p.end()}};
}

const BooleanRelation& RelationSequence::at(std::size_t index) const {
  if (index == 0) throw InvalidArgument("relation sequences are indexed from 1");
  if (index <= prefix.size()) return prefix[index - 1];
  return cycle[(index - prefix.size() - 1) % cycle.size()];
}

NodeSet RelationSequence::common_domain() const {
  NodeSet out = NodeSet::full(n());
  for (const auto& r : prefix) out &= r.domain();
  for (const auto& r : cycle) out &= r.domain();
  return out;
}

NodeSet d_infinity(const BooleanRelation& rho) { return RelationSequence::powers_of(rho).common_domain(); }

EventuallyPeriodicSet hit_set(const RelationSequence& seq, NodeSet u, NodeSet v) {
  return EventuallyPeriodicSet::from_predicate(seq.threshold(), seq.period(), [&](std::size_t k) {
    return seq.at(k).image(u).intersects(v);
  });
}

EventuallyPeriodicSet hit_set(const RelationSequence& seq, Node x, NodeSet v) {
  return hit_set(seq, NodeSet::single(x), v);
}

EventuallyPeriodicSet hit_set(const PowerTrace& trace, NodeSet u, NodeSet v) {
  return EventuallyPeriodicSet::from_predicate(trace.preperiod() - 1, trace.period(), [&](std::size_t k) {
    return trace.at(k).image(u).intersects(v);
  });
}

EventuallyPeriodicSet hit_set(const PowerTrace& trace, Node x, NodeSet v) {
  return hit_set(trace, NodeSet::single(x), v);
}

}  // namespace hyperrel
