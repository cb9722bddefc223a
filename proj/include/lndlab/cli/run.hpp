#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lnd::cli {

enum ExitCode : int {
  kVerified = 0,
  kNotVerified = 1,
  kUsageError = 2,
  kInvariantFailure = 3,
};

/// Runs one `lnd-lab` invocation. `args` excludes the program name. With
/// `--json` the report (including failures) is a single JSON document on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnd::cli
