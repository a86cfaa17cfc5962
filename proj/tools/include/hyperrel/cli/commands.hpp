#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperrel/cli/suites.hpp"

namespace hyperrel::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kRefuted = 2, kGuard = 3 };

struct AnalyzeOptions {
  std::string path;
  /// hypercyclic, strongly-hypercyclic, transitive, strongly-transitive; empty means all four.
  std::vector<std::string> properties;
  /// Overrides the family given in the file; all-nonempty when neither is set.
  std::optional<std::string> family;
  /// "yes" or "no": exit 2 when a reported status differs.
  std::optional<std::string> expect;
  bool show_s_sets = false;
  bool show_vectors = false;
};

struct SurveyOptions {
  std::size_t n = 0;
  bool iso = false;
  bool strong_only = false;
  bool json = false;
  std::size_t threads = 1;
};

struct EnumerateOptions {
  std::string what;  // topologies | tournaments
  std::size_t n = 0;
  bool iso = false;
};

/// Each command writes its report to `out` and returns an ExitCode; ParseError
/// and GuardError propagate to the caller.
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out);
int cmd_verify(const VerifyOptions& options, std::ostream& out);
int cmd_survey(const SurveyOptions& options, std::ostream& out);
int cmd_enumerate(const EnumerateOptions& options, std::ostream& out);

}  // namespace hyperrel::cli
