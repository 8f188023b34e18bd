#ifndef QUIVERCOUNT_TOOLS_CLI_HPP
#define QUIVERCOUNT_TOOLS_CLI_HPP

#include <ostream>

namespace quivercount::cli {

enum exit_code : int { ok = 0, check_failure = 1, resource = 2, bad_input = 3 };

/// Runs the quivercount command line. Everything is written to out/err; nothing is read
/// from stdin. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quivercount::cli

#endif  // QUIVERCOUNT_TOOLS_CLI_HPP
