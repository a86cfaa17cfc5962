#include "hyperrel/natset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hyperrel/error.hpp"

namespace hyperrel {

namespace {

constexpr std::string_view kUnion = "\xE2\x88\xAA";   // ∪
constexpr std::string_view kCdot = "\xC2\xB7";        // ·

bool member_of(const std::vector<bool>& prefix, const std::vector<bool>& residues, std::size_t n) {
  if (n == 0) return false;
  if (n <= prefix.size()) return prefix[n - 1];
  return residues[(n - prefix.size() - 1) % residues.size()];
}

EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b,
                              bool (*op)(bool, bool)) {
  const std::size_t t = std::max(a.threshold(), b.threshold());
  const std::size_t p = std::lcm(a.period(), b.period());
  return EventuallyPeriodicSet::from_predicate(
      t, p, [&](std::size_t n) { return op(a.contains(n), b.contains(n)); });
}

}  // namespace

EventuallyPeriodicSet::EventuallyPeriodicSet() : residues_{false} {}

EventuallyPeriodicSet::EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> residues)
    : prefix_(std::move(prefix)), residues_(std::move(residues)) {
  if (residues_.empty()) throw InvalidArgument("eventually periodic set needs period >= 1");
  canonicalize();
}

EventuallyPeriodicSet EventuallyPeriodicSet::from_predicate(
    std::size_t threshold, std::size_t period, const std::function<bool(std::size_t)>& member) {
  if (period == 0) throw InvalidArgument("eventually periodic set needs period >= 1");
  std::vector<bool> prefix(threshold);
  for (std::size_t n = 1; n <= threshold; ++n) prefix[n - 1] = member(n);
  std::vector<bool> residues(period);
  for (std::size_t i = 0; i < period; ++i) residues[i] = member(threshold + 1 + i);
  return {std::move(prefix), std::move(residues)};
}

EventuallyPeriodicSet EventuallyPeriodicSet::naturals() { return {{}, {true}}; }

EventuallyPeriodicSet EventuallyPeriodicSet::finite(std::initializer_list<std::size_t> elements) {
  return finite(std::vector<std::size_t>(elements));
}

EventuallyPeriodicSet EventuallyPeriodicSet::finite(const std::vector<std::size_t>& elements) {
  std::size_t top = 0;
  for (std::size_t e : elements) top = std::max(top, e);
  std::vector<bool> prefix(top);
  for (std::size_t e : elements) {
    if (e == 0) throw InvalidArgument("0 is not a natural number here");
    prefix[e - 1] = true;
  }
  return {std::move(prefix), {false}};
}

EventuallyPeriodicSet EventuallyPeriodicSet::cofinite(std::initializer_list<std::size_t> missing) {
  return ~finite(missing);
}

EventuallyPeriodicSet EventuallyPeriodicSet::progression(std::size_t a, std::size_t d) {
  if (d == 0) throw InvalidArgument("progression step must be >= 1");
  const std::size_t first = a == 0 ? d : a;
  std::vector<bool> residues(d, false);
  residues[0] = true;
  return {std::vector<bool>(first - 1, false), std::move(residues)};
}

void EventuallyPeriodicSet::canonicalize() {
  const std::size_t p = residues_.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = q; i < p && periodic; ++i) periodic = residues_[i] == residues_[i - q];
    if (periodic) {
      residues_.resize(q);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == residues_.back()) {
    std::rotate(residues_.rbegin(), residues_.rbegin() + 1, residues_.rend());
    residues_.front() = prefix_.back();
    prefix_.pop_back();
  }
}

bool EventuallyPeriodicSet::contains(std::size_t n) const { return member_of(prefix_, residues_, n); }

bool EventuallyPeriodicSet::is_empty() const {
  return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }) &&
         std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool EventuallyPeriodicSet::is_finite() const {
  return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool EventuallyPeriodicSet::is_cofinite() const {
  return std::all_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool EventuallyPeriodicSet::is_subset_of(const EventuallyPeriodicSet& other) const {
  const std::size_t bound = std::max(threshold(), other.threshold()) + std::lcm(period(), other.period());
  for (std::size_t n = 1; n <= bound; ++n) {
    if (contains(n) && !other.contains(n)) return false;
  }
  return true;
}

bool EventuallyPeriodicSet::contains_tail_from(std::size_t e) const {
  if (!is_cofinite()) return false;
  for (std::size_t n = std::max<std::size_t>(e, 1); n <= threshold(); ++n) {
    if (!prefix_[n - 1]) return false;
  }
  return true;
}

Rational EventuallyPeriodicSet::lower_density() const {
  const auto hits = static_cast<std::uint64_t>(std::count(residues_.begin(), residues_.end(), true));
  const auto p = static_cast<std::uint64_t>(period());
  const std::uint64_t g = std::gcd(hits, p);
  return {hits / g, p / g};
}

std::optional<std::size_t> EventuallyPeriodicSet::min_element() const {
  for (std::size_t n = 1; n <= threshold() + period(); ++n) {
    if (contains(n)) return n;
  }
  return std::nullopt;
}

std::optional<std::size_t> EventuallyPeriodicSet::cardinality() const {
  if (!is_finite()) return std::nullopt;
  return static_cast<std::size_t>(std::count(prefix_.begin(), prefix_.end(), true));
}

std::vector<std::size_t> EventuallyPeriodicSet::elements_up_to(std::size_t bound) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

EventuallyPeriodicSet operator|(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EventuallyPeriodicSet operator&(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EventuallyPeriodicSet EventuallyPeriodicSet::operator~() const {
  std::vector<bool> prefix = prefix_;
  prefix.flip();
  std::vector<bool> residues = residues_;
  residues.flip();
  return {std::move(prefix), std::move(residues)};
}

EventuallyPeriodicSet shift_down(const EventuallyPeriodicSet& a, std::size_t n) {
  const std::size_t t = a.threshold() > n ? a.threshold() - n : 0;
  return EventuallyPeriodicSet::from_predicate(t, a.period(),
                                               [&](std::size_t m) { return a.contains(m + n); });
}

EventuallyPeriodicSet add_multiples(const EventuallyPeriodicSet& a, std::size_t step) {
  if (step == 0) throw InvalidArgument("step must be >= 1");
  // m is a member iff some element a <= m - step lies in m's residue class mod step;
  // only the least element of each class matters.
  const std::size_t p = std::lcm(a.period(), step);
  std::vector<std::optional<std::size_t>> least(step);
  for (std::size_t n = 1; n <= a.threshold() + p; ++n) {
    if (a.contains(n) && !least[n % step]) least[n % step] = n;
  }
  std::size_t t = 0;
  for (const auto& l : least) {
    if (l) t = std::max(t, *l + step);
  }
  return EventuallyPeriodicSet::from_predicate(t, step, [&](std::size_t m) {
    const auto& l = least[m % step];
    return l && m >= *l + step;
  });
}

std::string render(const EventuallyPeriodicSet& a) {
  if (a.is_empty()) return "EMPTY";
  auto list = [](const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(xs[i]);
    }
    return out + "}";
  };
  if (a.is_cofinite()) {
    std::vector<std::size_t> missing;
    for (std::size_t n = 1; n <= a.threshold(); ++n) {
      if (!a.contains(n)) missing.push_back(n);
    }
    return missing.empty() ? "N" : "N\\" + list(missing);
  }
  std::vector<std::string> terms;
  const auto head = a.elements_up_to(a.threshold());
  if (!head.empty()) terms.push_back(list(head));
  for (std::size_t r = 0; r < a.period(); ++r) {
    if (!a.residues()[r]) continue;
    terms.push_back("(" + std::to_string(a.threshold() + 1 + r) + "+" + std::to_string(a.period()) +
                    std::string(kCdot) + "N0)");
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " " + std::string(kUnion) + " ";
    out += terms[i];
  }
  return out;
}

namespace {

class NatsetParser {
 public:
  explicit NatsetParser(std::string_view text) : text_(text) {}

  EventuallyPeriodicSet parse() {
    skip_ws();
    EventuallyPeriodicSet result;
    if (consume("EMPTY")) {
      result = EventuallyPeriodicSet::empty();
    } else if (peek_naturals()) {
      consume("N");
      if (consume("\\")) {
        result = ~parse_braced();
      } else {
        result = EventuallyPeriodicSet::naturals();
      }
    } else {
      result = parse_term();
      skip_ws();
      while (consume(kUnion) || consume("U")) {
        skip_ws();
        result = result | parse_term();
        skip_ws();
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "natset: " + what + " at offset " + std::to_string(pos_) + " in '" +
                            std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek_naturals() const {
    return text_.substr(pos_, 1) == "N" && text_.substr(pos_, 2) != "N0";
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  EventuallyPeriodicSet parse_braced() {
    expect("{");
    std::vector<std::size_t> elements;
    skip_ws();
    if (!consume("}")) {
      do {
        const std::size_t e = number();
        if (e == 0) fail("0 is not a member of N");
        elements.push_back(e);
        skip_ws();
      } while (consume(","));
      expect("}");
    }
    return EventuallyPeriodicSet::finite(elements);
  }

  EventuallyPeriodicSet parse_term() {
    skip_ws();
    if (text_.substr(pos_, 1) == "{") return parse_braced();
    expect("(");
    const std::size_t base = number();
    expect("+");
    const std::size_t step = number();
    skip_ws();
    if (!consume(kCdot) && !consume("*")) fail("expected '·'");
    expect("N0");
    expect(")");
    if (step == 0) fail("progression step must be >= 1");
    return EventuallyPeriodicSet::progression(base, step);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EventuallyPeriodicSet parse_natset(std::string_view text) { return NatsetParser(text).parse(); }

std::size_t EventuallyPeriodicSetHash::operator()(const EventuallyPeriodicSet& a) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(a.threshold() * 1315423911u + a.period());
  auto mix = [&h](bool b) { h = h * 31 + (b ? 1 : 0); };
  for (bool b : a.prefix()) mix(b);
  for (bool b : a.residues()) mix(b);
  return h;
}

}  // namespace hyperrel
