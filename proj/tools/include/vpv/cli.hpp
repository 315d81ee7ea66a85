#pragma once

#include <iosfwd>

namespace vpv::cli {

/// Exit codes of the vpv tool.
enum ExitCode : int {
  kOk = 0,
  kUnexpectedStatus = 1,
  kUsage = 2,
  kIo = 3,
};

/// Parses argv and runs one subcommand, writing to out/err instead of the process streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vpv::cli
