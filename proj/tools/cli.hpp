#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzstar::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the mzstar command line with the given arguments (argv[0] excluded).
/// Reports go to `out`, diagnostics to `err`. Environment variables prefixed
/// MZSTAR_ supply defaults for the global flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzstar::cli
