#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperrel {

using Node = std::size_t;

inline constexpr std::size_t kMaxNodes = 64;

/// A subset of the node set {0, ..., 63}, one bit per node.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<Node> nodes);
  /// The set whose members are the set bits of `bits`.
  static constexpr NodeSet from_bits(std::uint64_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr NodeSet single(Node v) { return from_bits(std::uint64_t{1} << v); }
  static constexpr NodeSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Node v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Node first() const { return static_cast<Node>(std::countr_zero(bits_)); }

  constexpr void insert(Node v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Node v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr NodeSet operator|(NodeSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Node>(std::countr_zero(b)));
  }

  std::vector<Node> nodes() const;

  constexpr auto operator<=>(const NodeSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Display name of a node: node 0 is "x1".
std::string node_name(Node v);

/// "{x1,x3}"; the empty set renders as "{}".
std::string to_string(NodeSet s);

}  // namespace hyperrel
