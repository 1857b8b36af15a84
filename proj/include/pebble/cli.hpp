#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pebble::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectMismatch = 1, ///< --expect given and the answer differs
  kUsage = 2,          ///< bad flags, unknown fixture, malformed input, budget exceeded
  kNetwork = 3,        ///< fetch failed with nothing cached
};

/// Runs one `pebble` command. `args` excludes the program name. Reports go to
/// `out`, diagnostics (and fetch cache logging) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pebble::cli
