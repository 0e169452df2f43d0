#ifndef PGRAPH_TOOLS_CLI_HPP
#define PGRAPH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pgraph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoOrParseError = 1,
  kRejected = 2,  // NotAPowerGraph or a FAIL verdict
};

/// Runs one subcommand (gen, classify, reconstruct, verify, closure).
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgraph::cli

#endif  // PGRAPH_TOOLS_CLI_HPP
