#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affs::cli {

enum ExitCode : int { Success = 0, VerificationFailure = 1, UsageError = 2 };

/// args excludes the program name. Output goes to out, diagnostics to err,
/// and `cell --matrix -` reads from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace affs::cli
