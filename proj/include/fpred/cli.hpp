#ifndef FPRED_CLI_HPP
#define FPRED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fpred {

enum ExitCode : int {
  kExitOk = 0,
  kExitTypeError = 1,
  kExitParseError = 2,
  kExitInvariant = 3,
  kExitFuel = 4,
};

/// The `fpred` command line. `args` excludes the program name; a FILE
/// argument of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace fpred

#endif  // FPRED_CLI_HPP
