#pragma once

// Run settings read from a small key = value file.

#include <iosfwd>
#include <optional>
#include <string>

namespace polydag {

struct RunConfig {
  int workers = 1;
  /// Wall-clock budget for enumeration; none when unset.
  std::optional<double> budget_seconds;
};

/// Lines "key = value"; '#' starts a comment. Known keys: workers,
/// budget_seconds. Throws ValidationError on unknown keys or bad values.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace polydag
