#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace harbourne::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInconclusive = 1,
  kUsageError = 2,
  kInterrupted = 3,
};

/// Runs one command line (without the program name). `interrupt`, when
/// set, is polled by long-running checks.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* interrupt = nullptr);

}  // namespace harbourne::cli
