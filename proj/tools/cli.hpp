#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signedsum::cli {

/// Runs the `signedsum` command line; args excludes the program name.
/// Returns the process exit code: 0 success, 1 a verified check failed,
/// 2 usage, parse or envelope error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signedsum::cli
