#include "hyperrel/cli/instance.hpp"

#include <fstream>
#include <sstream>

#include "hyperrel/digraphs.hpp"
#include "hyperrel/error.hpp"

namespace hyperrel::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + text + "'");
  }
}

Node parse_node(const std::string& text, std::size_t n, std::size_t line) {
  const std::string digits = !text.empty() && (text[0] == 'x' || text[0] == 'X') ? text.substr(1) : text;
  const std::size_t v = parse_count(digits, line);
  if (v == 0 || v > n) throw ParseError(line, "node '" + text + "' outside x1..x" + std::to_string(n));
  return v - 1;
}

struct Block {
  BooleanRelation rel{1};
  bool tournament = false;
  std::size_t first_line = 0;
};

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  std::vector<Block> blocks;
  std::vector<NodeSet> opens;
  std::size_t opens_line = 0;
  std::optional<std::string> topology_word;
  std::string raw;
  std::size_t line = 0;
  bool pending_block = true;

  auto need_nodes = [&](std::size_t ln) {
    if (inst.n == 0) throw ParseError(ln, "node count must come first ('nodes:' or 'tournament:')");
  };
  auto current = [&](std::size_t ln) -> Block& {
    need_nodes(ln);
    if (pending_block) {
      blocks.push_back({BooleanRelation(inst.n), false, ln});
      pending_block = false;
    }
    return blocks.back();
  };

  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw.substr(0, raw.find('#'));
    text = trim(text);
    if (text.empty()) continue;
    if (text == "---") {
      if (pending_block) throw ParseError(line, "empty relation block");
      pending_block = true;
      continue;
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
    const std::string key = trim(text.substr(0, colon));
    const std::string value = trim(text.substr(colon + 1));
    const auto args = words(value);

    if (key == "nodes" || key == "tournament") {
      if (args.size() != 1) throw ParseError(line, key + " takes one number");
      const std::size_t n = parse_count(args[0], line);
      if (n == 0 || n > kMaxNodes) throw ParseError(line, "node count must be in 1..64");
      if (inst.n != 0 && inst.n != n) throw ParseError(line, "node count differs from earlier declaration");
      inst.n = n;
      if (key == "tournament") current(line).tournament = true;
    } else if (key == "arc" || key == "edge") {
      if (args.size() != 2) throw ParseError(line, key + " takes two nodes");
      Block& b = current(line);
      const Node a = parse_node(args[0], inst.n, line);
      const Node c = parse_node(args[1], inst.n, line);
      b.rel.insert(a, c);
      if (key == "edge") {
        if (a == c) throw ParseError(line, "edges join two different nodes");
        b.rel.insert(c, a);
      }
    } else if (key == "open") {
      need_nodes(line);
      NodeSet s;
      for (const auto& w : args) s.insert(parse_node(w, inst.n, line));
      opens.push_back(s);
      if (opens_line == 0) opens_line = line;
    } else if (key == "topology") {
      if (value != "discrete" && value != "antidiscrete") throw ParseError(line, "topology is 'discrete' or 'antidiscrete'");
      topology_word = value;
      if (opens_line == 0) opens_line = line;
    } else if (key == "family") {
      try {
        inst.family = parse_family(value);
      } catch (const ParseError& e) {
        throw ParseError(line, e.what());
      }
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (inst.n == 0) throw ParseError(line, "no node count given");
  if (blocks.empty()) blocks.push_back({BooleanRelation(inst.n), false, line});
  if (pending_block && !blocks.empty()) throw ParseError(line, "empty relation block after '---'");
  for (const Block& b : blocks) {
    if (b.tournament) {
      bool ok = true;
      for (Node i = 0; i < inst.n; ++i) {
        ok = ok && !b.rel.contains(i, i);
        for (Node j = i + 1; j < inst.n; ++j) ok = ok && (b.rel.contains(i, j) != b.rel.contains(j, i));
      }
      if (!ok) throw ParseError(b.first_line, "block is declared a tournament but is not one");
    }
    inst.relations.push_back(b.rel);
    inst.tournaments.push_back(b.tournament);
  }
  if (topology_word && !opens.empty()) throw ParseError(opens_line, "give either 'topology:' or 'open:' lines");
  try {
    if (!opens.empty()) {
      opens.push_back(NodeSet{});
      opens.push_back(NodeSet::full(inst.n));
      inst.topology = FiniteTopology::validate(inst.n, opens);
    } else if (topology_word == "antidiscrete") {
      inst.topology = FiniteTopology::antidiscrete(inst.n);
    } else {
      inst.topology = FiniteTopology::discrete(inst.n);
    }
  } catch (const GuardError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(opens_line, e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

}  // namespace hyperrel::cli
