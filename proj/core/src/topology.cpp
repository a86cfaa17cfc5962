#include "hyperrel/topology.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hyperrel {

namespace {

const char* describe(TopologyError::Kind kind) {
  switch (kind) {
    case TopologyError::Kind::MissingEmptyOrFull:
      return "topology must contain the empty set and the full set";
    case TopologyError::Kind::NotClosedUnderUnion:
      return "topology is not closed under union";
    case TopologyError::Kind::NotClosedUnderIntersection:
      return "topology is not closed under intersection";
    case TopologyError::Kind::OutOfRange:
      return "open set mentions a node outside the ground set";
  }
  return "invalid topology";
}

void sort_opens(std::vector<NodeSet>& opens) {
  std::sort(opens.begin(), opens.end(), [](NodeSet a, NodeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

}  // namespace

TopologyError::TopologyError(Kind kind, std::optional<std::pair<NodeSet, NodeSet>> witness)
    : InvalidArgument(witness ? std::string(describe(kind)) + ": " + to_string(witness->first) + ", " +
                                    to_string(witness->second)
                              : std::string(describe(kind))),
      kind_(kind),
      witness_(witness) {}

FiniteTopology::FiniteTopology(std::size_t n, std::vector<NodeSet> opens) : n_(n), opens_(std::move(opens)) {
  for (NodeSet s : opens_) {
    if (s.empty()) continue;
    const bool minimal = std::none_of(minimal_.begin(), minimal_.end(),
                                      [&](NodeSet m) { return m.is_subset_of(s); });
    if (minimal) minimal_.push_back(s);
  }
  neighborhood_.assign(n_, ground());
  for (NodeSet s : opens_) {
    s.for_each([&](Node v) {
      if (s.size() < neighborhood_[v].size()) neighborhood_[v] = s;
    });
  }
}

FiniteTopology FiniteTopology::validate(std::size_t n, std::vector<NodeSet> opens) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("topology needs 1..64 points");
  const NodeSet full = NodeSet::full(n);
  for (NodeSet s : opens) {
    if (!s.is_subset_of(full)) throw TopologyError(TopologyError::Kind::OutOfRange, std::nullopt);
  }
  sort_opens(opens);
  if (opens.empty() || !opens.front().empty() || opens.back() != full) {
    throw TopologyError(TopologyError::Kind::MissingEmptyOrFull, std::nullopt);
  }
  auto present = [&](NodeSet s) { return std::binary_search(opens.begin(), opens.end(), s, [](NodeSet a, NodeSet b) {
                                    if (a.size() != b.size()) return a.size() < b.size();
                                    return a.bits() < b.bits();
                                  }); };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!present(opens[i] | opens[j])) {
        throw TopologyError(TopologyError::Kind::NotClosedUnderUnion, std::pair{opens[i], opens[j]});
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!present(opens[i] & opens[j])) {
        throw TopologyError(TopologyError::Kind::NotClosedUnderIntersection, std::pair{opens[i], opens[j]});
      }
    }
  }
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
  if (n == 0) throw InvalidArgument("topology needs at least one point");
  if (n > 20) throw GuardError("discrete topology limited to 20 points");
  std::vector<NodeSet> opens;
  opens.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) opens.push_back(NodeSet::from_bits(b));
  sort_opens(opens);
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::antidiscrete(std::size_t n) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("topology needs 1..64 points");
  return FiniteTopology(n, {NodeSet{}, NodeSet::full(n)});
}

FiniteTopology FiniteTopology::generated_by(std::size_t n, const std::vector<NodeSet>& generators) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("topology needs 1..64 points");
  const NodeSet full = NodeSet::full(n);
  // Minimal neighborhoods form a base: U_v is the intersection of the generators containing v.
  std::vector<NodeSet> base(n, full);
  for (NodeSet g : generators) {
    if (!g.is_subset_of(full)) throw TopologyError(TopologyError::Kind::OutOfRange, std::nullopt);
    g.for_each([&](Node v) { base[v] &= g; });
  }
  std::set<std::uint64_t> opens{0, full.bits()};
  for (NodeSet b : base) {
    std::vector<std::uint64_t> added;
    for (std::uint64_t o : opens) added.push_back(o | b.bits());
    opens.insert(added.begin(), added.end());
  }
  std::vector<NodeSet> out;
  for (std::uint64_t o : opens) out.push_back(NodeSet::from_bits(o));
  sort_opens(out);
  return FiniteTopology(n, std::move(out));
}

std::vector<NodeSet> FiniteTopology::nonempty_opens() const { return {opens_.begin() + 1, opens_.end()}; }

bool FiniteTopology::is_open(NodeSet s) const { return std::find(opens_.begin(), opens_.end(), s) != opens_.end(); }

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  if (n == 0) throw InvalidArgument("topology needs at least one point");
  if (n > 4) throw GuardError("topology enumeration limited to n <= 4; use sampling for larger n");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t full = subsets - 1;
  std::vector<FiniteTopology> out;
  // Bit s of the collection mask says whether subset s is open.
  const std::uint64_t collections = std::uint64_t{1} << subsets;
  for (std::uint64_t c = 0; c < collections; ++c) {
    if ((c & 1U) == 0 || ((c >> full) & 1U) == 0) continue;
    bool ok = true;
    for (std::uint64_t a = 0; a < subsets && ok; ++a) {
      if (((c >> a) & 1U) == 0) continue;
      for (std::uint64_t b = a + 1; b < subsets && ok; ++b) {
        if (((c >> b) & 1U) == 0) continue;
        ok = ((c >> (a | b)) & 1U) != 0 && ((c >> (a & b)) & 1U) != 0;
      }
    }
    if (!ok) continue;
    std::vector<NodeSet> opens;
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if ((c >> a) & 1U) opens.push_back(NodeSet::from_bits(a));
    }
    sort_opens(opens);
    out.push_back(FiniteTopology::validate(n, std::move(opens)));
  }
  return out;
}

std::vector<FiniteTopology> sample_topologies(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0 || n > kMaxNodes) throw InvalidArgument("topology needs 1..64 points");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = NodeSet::full(n).bits();
  std::uniform_int_distribution<int> how_many(0, 3);
  std::vector<FiniteTopology> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<NodeSet> gens;
    const int k = how_many(rng);
    for (int g = 0; g < k; ++g) gens.push_back(NodeSet::from_bits(rng() & mask));
    out.push_back(FiniteTopology::generated_by(n, gens));
  }
  return out;
}

}  // namespace hyperrel
