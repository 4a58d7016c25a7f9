#ifndef RAAGCC_CLI_HPP
#define RAAGCC_CLI_HPP

#include <string>
#include <vector>

namespace raagcc {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeLimit = 3;
inline constexpr int kExitViolation = 4;

struct CliOutcome {
  int exit_code = kExitOk;
  std::string out;  // report, empty when --out was given
  std::string err;
};

// args excludes the program name, e.g. {"rank", "--example", "diamonds:3"}.
CliOutcome run_cli(std::vector<std::string> const &args);

} // namespace raagcc

#endif // RAAGCC_CLI_HPP
