#pragma once

#include <iosfwd>
#include <stdexcept>

namespace disclosure::app {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kAssertionFailure = 2,
  kGuardExceeded = 3,
};

/// A computed result contradicted an expected property.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv, dispatches the subcommand and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace disclosure::app
