#ifndef HANKELDET_TOOLS_CLI_HPP
#define HANKELDET_TOOLS_CLI_HPP

#include <iosfwd>

namespace hankeldet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kFailure = 3 };

/// Runs the command line in-process, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankeldet::cli

#endif  // HANKELDET_TOOLS_CLI_HPP
