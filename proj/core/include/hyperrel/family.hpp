#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperrel/natset.hpp"

namespace hyperrel {

enum class FamilyKind {
  AllNonempty,
  UpwardFrom,
  FiniteUnionsOf,
  Tail,
  OddOnly,
  Infinite,
  PositiveLowerDensity,
  Cofinite,
  AtLeast,
};

/// A family of subsets of N given as a decidable membership predicate.
class FamilySpec {
 public:
  static FamilySpec all_nonempty();
  /// Supersets of at least one generator.
  static FamilySpec upward_from(std::vector<EventuallyPeriodicSet> generators);
  /// Sets equal to a union of some of the generators; the empty union counts
  /// only when `include_empty` is set.
  static FamilySpec finite_unions_of(std::vector<EventuallyPeriodicSet> generators, bool include_empty);
  /// Sets containing {n : n >= e}. Throws InvalidArgument if e == 0.
  static FamilySpec tail(std::size_t e);
  /// Nonempty sets of odd numbers.
  static FamilySpec odd_only();
  static FamilySpec infinite();
  static FamilySpec positive_lower_density();
  static FamilySpec cofinite();
  /// Sets with at least m elements.
  static FamilySpec at_least(std::size_t m);

  FamilyKind kind() const { return kind_; }
  const std::vector<EventuallyPeriodicSet>& generators() const { return generators_; }
  bool include_empty() const { return include_empty_; }
  /// Parameter e of Tail, m of AtLeast; 0 otherwise.
  std::size_t parameter() const { return parameter_; }

  bool contains(const EventuallyPeriodicSet& a) const;

  /// Closure under supersets, as declared by the kind.
  bool upward_closed() const { return upward_closed_; }
  bool contains_naturals() const { return contains_naturals_; }
  bool contains_empty() const { return contains_empty_; }

  /// Name in the command-line family grammar.
  std::string name() const;

 private:
  explicit FamilySpec(FamilyKind kind);
  void finish();

  FamilyKind kind_;
  std::vector<EventuallyPeriodicSet> generators_;
  bool include_empty_ = false;
  std::size_t parameter_ = 0;
  bool upward_closed_ = true;
  bool contains_naturals_ = false;
  bool contains_empty_ = false;
};

/// Checks condition (I) on sample pairs (A, B) with A ⊆ B: false as soon as
/// A is a member and B is not. Pairs that are not nested are ignored.
bool check_upward_closed(const FamilySpec& family,
                         const std::vector<std::pair<EventuallyPeriodicSet, EventuallyPeriodicSet>>& samples);

/// Parses `all-nonempty`, `tail:e`, `odd-only`, `upward:[A;B]`, `unions:[A;B]`,
/// `unions:[A;B]+empty`, `infinite`, `cofinite`, `lower-density>0`, `at-least:m`.
FamilySpec parse_family(std::string_view text);

}  // namespace hyperrel
