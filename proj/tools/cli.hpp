#ifndef EXPOFIT_TOOLS_CLI_HPP
#define EXPOFIT_TOOLS_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace expofit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataValidation = 2,
  kNoConvergence = 3,
};

struct Environment {
  /// Bootstrap worker threads; 0 lets the library choose.
  unsigned threads = 0;
  /// Produces the report timestamp. Defaults to UTC now in ISO 8601.
  std::function<std::string()> timestamp;
};

/// Reads EXPOFIT_THREADS. Unset, empty or unparsable values mean 0.
Environment environment_from_process();

std::string utc_timestamp();

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace expofit::cli

#endif  // EXPOFIT_TOOLS_CLI_HPP
