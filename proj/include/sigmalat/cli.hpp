#pragma once

#include <ostream>

#include "sigmalat/error.hpp"

namespace sigmalat::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kInvalidTable = 4,
  kInfrastructure = 5,
};

int exit_code_for(ErrorKind kind);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigmalat::cli
