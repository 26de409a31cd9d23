#ifndef NODALSTAB_CLI_HPP
#define NODALSTAB_CLI_HPP

#include <istream>
#include <string>
#include <vector>

namespace nodalstab::cli {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct CommandResult {
  int exit_code = kExitPass;
  std::string out;  // one JSON document
  std::string err;  // human-readable summary
};

/// args excludes the program name; `in` is read when no input path is given
/// or the path is "-".
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);

}  // namespace nodalstab::cli

#endif
