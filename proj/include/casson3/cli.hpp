#pragma once

#include <iosfwd>

namespace casson3 {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitDiagnosticTight = 3,
  kExitNotQuadratic = 4,
  kExitVerifyMismatch = 5,
  kExitChecksum = 6,
};

/// Entry point of the casson3 tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casson3
