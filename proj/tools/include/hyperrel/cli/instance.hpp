#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hyperrel/family.hpp"
#include "hyperrel/relations.hpp"
#include "hyperrel/topology.hpp"

namespace hyperrel::cli {

/// A parsed instance file: one relation per block, blocks separated by `---`.
struct Instance {
  std::size_t n = 0;
  std::vector<BooleanRelation> relations;
  /// Blocks declared with `tournament:`.
  std::vector<bool> tournaments;
  FiniteTopology topology = FiniteTopology::discrete(1);
  std::optional<FamilySpec> family;
};

/// Line format, 1-based nodes written `x3` or `3`:
///   nodes: 5 | tournament: 5 | arc: x1 x2 | edge: x1 x2 | open: x2 x5 |
///   topology: discrete|antidiscrete | family: <expr> | --- | # comment
/// Throws ParseError with the offending line number.
Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

}  // namespace hyperrel::cli
