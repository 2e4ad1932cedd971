#pragma once

#include <iosfwd>

namespace stc {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,     // usage errors, invalid certificates, contract violations
  kExitParse = 2,     // malformed instance files
  kExitResource = 3,  // oracle or table size limits
};

/// Runs one command. JSON goes to out, the human-readable summary and error
/// messages to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stc
