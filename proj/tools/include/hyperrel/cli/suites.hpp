#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperrel::cli {

struct VerifyOptions {
  std::string suite;
  /// Main size bound of the suite; each suite has its own default.
  std::optional<std::size_t> max_n;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  /// Topologies drawn per tournament class where enumeration is out of reach.
  std::size_t samples = 32;
  bool verbose = false;
};

std::vector<std::string> suite_names();

/// Writes per-instance lines (failures always, passes with `verbose`), one
/// summary line per section and a final verdict line. Returns true iff every
/// check passed. Throws InvalidArgument for an unknown suite.
bool run_suite(const VerifyOptions& options, std::ostream& out);

}  // namespace hyperrel::cli
