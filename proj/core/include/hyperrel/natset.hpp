#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperrel {

/// Exact rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator==(const Rational&) const = default;
};

/// A subset of N = {1, 2, ...} whose membership is periodic beyond a threshold.
///
/// Membership of n <= threshold() is prefix()[n - 1]; membership of n > threshold()
/// is residues()[(n - threshold() - 1) % period()]. Values are always held in
/// canonical form (minimal period, then minimal threshold), so two sets are equal
/// exactly when their fields are equal.
class EventuallyPeriodicSet {
 public:
  /// The empty set.
  EventuallyPeriodicSet();

  /// Throws InvalidArgument if `residues` is empty.
  EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> residues);

  /// Builds the set from a membership predicate evaluated on 1..threshold+period.
  static EventuallyPeriodicSet from_predicate(std::size_t threshold, std::size_t period,
                                              const std::function<bool(std::size_t)>& member);

  static EventuallyPeriodicSet empty() { return {}; }
  static EventuallyPeriodicSet naturals();
  static EventuallyPeriodicSet finite(std::initializer_list<std::size_t> elements);
  static EventuallyPeriodicSet finite(const std::vector<std::size_t>& elements);
  /// N without the listed elements.
  static EventuallyPeriodicSet cofinite(std::initializer_list<std::size_t> missing);
  /// {a + k*d : k >= 0} intersected with N. Throws InvalidArgument if d == 0.
  static EventuallyPeriodicSet progression(std::size_t a, std::size_t d);

  std::size_t threshold() const { return prefix_.size(); }
  std::size_t period() const { return residues_.size(); }
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& residues() const { return residues_; }

  /// Membership of n; n = 0 is never a member.
  bool contains(std::size_t n) const;
  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  bool is_subset_of(const EventuallyPeriodicSet& other) const;
  /// True iff {n : n >= e} is contained in the set.
  bool contains_tail_from(std::size_t e) const;
  /// Lower (equivalently, natural) density, |residues| / period.
  Rational lower_density() const;
  std::optional<std::size_t> min_element() const;
  /// Number of elements, or nullopt when infinite.
  std::optional<std::size_t> cardinality() const;
  /// Members in 1..bound.
  std::vector<std::size_t> elements_up_to(std::size_t bound) const;

  friend EventuallyPeriodicSet operator|(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);
  friend EventuallyPeriodicSet operator&(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);
  EventuallyPeriodicSet operator~() const;

  auto operator<=>(const EventuallyPeriodicSet&) const = default;
  bool operator==(const EventuallyPeriodicSet&) const = default;

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> residues_;
};

/// A - n = {k - n : k in A, k > n}.
EventuallyPeriodicSet shift_down(const EventuallyPeriodicSet& a, std::size_t n);

/// A + step*N = {a + k*step : a in A, k >= 1}.
EventuallyPeriodicSet add_multiples(const EventuallyPeriodicSet& a, std::size_t step);

/// Textual form: EMPTY, N, N\{a,...}, {a,...}, or {a,...} ∪ (b+p·N0) ∪ ...
std::string render(const EventuallyPeriodicSet& a);

/// Parses the rendering grammar. Also accepts `U` for `∪` and `*` for `·`.
EventuallyPeriodicSet parse_natset(std::string_view text);

struct EventuallyPeriodicSetHash {
  std::size_t operator()(const EventuallyPeriodicSet& a) const noexcept;
};

}  // namespace hyperrel
