#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tririgid::cli {

/// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 bad input,
/// 3 internal invariant breach.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

/// Runs one command line (args excludes the program name). Verdicts go to
/// `out`, diagnostics to `err`; file arguments "-" or omitted read `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tririgid::cli
