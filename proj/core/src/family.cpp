#include "hyperrel/family.hpp"

#include <algorithm>

#include "hyperrel/error.hpp"

namespace hyperrel {

FamilySpec::FamilySpec(FamilyKind kind) : kind_(kind) {}

void FamilySpec::finish() {
  upward_closed_ = kind_ != FamilyKind::FiniteUnionsOf && kind_ != FamilyKind::OddOnly;
  contains_naturals_ = contains(EventuallyPeriodicSet::naturals());
  contains_empty_ = contains(EventuallyPeriodicSet::empty());
}

FamilySpec FamilySpec::all_nonempty() {
  FamilySpec f(FamilyKind::AllNonempty);
  f.finish();
  return f;
}

FamilySpec FamilySpec::upward_from(std::vector<EventuallyPeriodicSet> generators) {
  FamilySpec f(FamilyKind::UpwardFrom);
  f.generators_ = std::move(generators);
  f.finish();
  return f;
}

FamilySpec FamilySpec::finite_unions_of(std::vector<EventuallyPeriodicSet> generators, bool include_empty) {
  FamilySpec f(FamilyKind::FiniteUnionsOf);
  f.generators_ = std::move(generators);
  f.include_empty_ = include_empty;
  f.finish();
  return f;
}

FamilySpec FamilySpec::tail(std::size_t e) {
  if (e == 0) throw InvalidArgument("tail family needs e >= 1");
  FamilySpec f(FamilyKind::Tail);
  f.parameter_ = e;
  f.finish();
  return f;
}

FamilySpec FamilySpec::odd_only() {
  FamilySpec f(FamilyKind::OddOnly);
  f.finish();
  return f;
}

FamilySpec FamilySpec::infinite() {
  FamilySpec f(FamilyKind::Infinite);
  f.finish();
  return f;
}

FamilySpec FamilySpec::positive_lower_density() {
  FamilySpec f(FamilyKind::PositiveLowerDensity);
  f.finish();
  return f;
}

FamilySpec FamilySpec::cofinite() {
  FamilySpec f(FamilyKind::Cofinite);
  f.finish();
  return f;
}

FamilySpec FamilySpec::at_least(std::size_t m) {
  FamilySpec f(FamilyKind::AtLeast);
  f.parameter_ = m;
  f.finish();
  return f;
}

bool FamilySpec::contains(const EventuallyPeriodicSet& a) const {
  switch (kind_) {
    case FamilyKind::AllNonempty:
      return !a.is_empty();
    case FamilyKind::UpwardFrom:
      return std::any_of(generators_.begin(), generators_.end(),
                         [&](const EventuallyPeriodicSet& g) { return g.is_subset_of(a); });
    case FamilyKind::FiniteUnionsOf: {
      if (a.is_empty()) {
        return include_empty_ || std::any_of(generators_.begin(), generators_.end(),
                                             [](const EventuallyPeriodicSet& g) { return g.is_empty(); });
      }
      EventuallyPeriodicSet covered;
      for (const auto& g : generators_) {
        if (g.is_subset_of(a)) covered = covered | g;
      }
      return covered == a;
    }
    case FamilyKind::Tail:
      return a.contains_tail_from(parameter_);
    case FamilyKind::OddOnly: {
      if (a.is_empty()) return false;
      const std::size_t bound = a.threshold() + 2 * a.period();
      for (std::size_t n = 2; n <= bound; n += 2) {
        if (a.contains(n)) return false;
      }
      return true;
    }
    case FamilyKind::Infinite:
      return !a.is_finite();
    case FamilyKind::PositiveLowerDensity:
      return a.lower_density().num > 0;
    case FamilyKind::Cofinite:
      return a.is_cofinite();
    case FamilyKind::AtLeast: {
      const auto card = a.cardinality();
      return !card || *card >= parameter_;
    }
  }
  return false;
}

std::string FamilySpec::name() const {
  auto list = [this] {
    std::string out = "[";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i > 0) out += ';';
      out += render(generators_[i]);
    }
    return out + "]";
  };
  switch (kind_) {
    case FamilyKind::AllNonempty:
      return "all-nonempty";
    case FamilyKind::UpwardFrom:
      return "upward:" + list();
    case FamilyKind::FiniteUnionsOf:
      return "unions:" + list() + (include_empty_ ? "+empty" : "");
    case FamilyKind::Tail:
      return "tail:" + std::to_string(parameter_);
    case FamilyKind::OddOnly:
      return "odd-only";
    case FamilyKind::Infinite:
      return "infinite";
    case FamilyKind::PositiveLowerDensity:
      return "lower-density>0";
    case FamilyKind::Cofinite:
      return "cofinite";
    case FamilyKind::AtLeast:
      return "at-least:" + std::to_string(parameter_);
  }
  return {};
}

bool check_upward_closed(const FamilySpec& family,
                         const std::vector<std::pair<EventuallyPeriodicSet, EventuallyPeriodicSet>>& samples) {
  for (const auto& [a, b] : samples) {
    if (a.is_subset_of(b) && family.contains(a) && !family.contains(b)) return false;
  }
  return true;
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(0, "family: expected a number after '" + std::string(what) + "'");
  }
  return std::stoul(std::string(text));
}

std::vector<EventuallyPeriodicSet> parse_generator_list(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError(0, "family: generator list must look like [set;set;...]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<EventuallyPeriodicSet> out;
  while (!text.empty()) {
    const std::size_t cut = text.find(';');
    out.push_back(parse_natset(text.substr(0, cut)));
    if (cut == std::string_view::npos) break;
    text = text.substr(cut + 1);
  }
  return out;
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "all-nonempty") return FamilySpec::all_nonempty();
  if (text == "odd-only") return FamilySpec::odd_only();
  if (text == "infinite") return FamilySpec::infinite();
  if (text == "cofinite") return FamilySpec::cofinite();
  if (text == "lower-density>0") return FamilySpec::positive_lower_density();
  if (starts_with(text, "tail:")) {
    const std::size_t e = parse_count(text.substr(5), "tail:");
    if (e == 0) throw ParseError(0, "family: tail needs e >= 1");
    return FamilySpec::tail(e);
  }
  if (starts_with(text, "at-least:")) return FamilySpec::at_least(parse_count(text.substr(9), "at-least:"));
  if (starts_with(text, "upward:")) return FamilySpec::upward_from(parse_generator_list(text.substr(7)));
  if (starts_with(text, "unions:")) {
    std::string_view rest = text.substr(7);
    bool include_empty = false;
    constexpr std::string_view kEmpty = "+empty";
    if (rest.size() >= kEmpty.size() && rest.substr(rest.size() - kEmpty.size()) == kEmpty) {
      include_empty = true;
      rest.remove_suffix(kEmpty.size());
    }
    return FamilySpec::finite_unions_of(parse_generator_list(rest), include_empty);
  }
  throw ParseError(0, "unknown family '" + std::string(text) + "'");
}

}  // namespace hyperrel
