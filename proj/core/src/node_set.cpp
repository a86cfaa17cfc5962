#include "hyperrel/node_set.hpp"

namespace hyperrel {

NodeSet::NodeSet(std::initializer_list<Node> nodes) {
  for (Node v : nodes) insert(v);
}

std::vector<Node> NodeSet::nodes() const {
  std::vector<Node> out;
  out.reserve(size());
  for_each([&](Node v) { out.push_back(v); });
  return out;
}

std::string node_name(Node v) { return "x" + std::to_string(v + 1); }

std::string to_string(NodeSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Node v) {
    if (!first) out += ',';
    out += node_name(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace hyperrel
