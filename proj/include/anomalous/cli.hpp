#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace anomalous::cli {

enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,
    kInvalidArguments = 2,
    kVerificationFailure = 3,
    kWorkRefused = 4,
};

// Runs one command (solve, check, oracle, sweep, table, selftest). `args`
// excludes the program name. Results go to `out` (or --out), diagnostics and
// usage text to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace anomalous::cli
