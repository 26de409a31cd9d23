#include <iostream>
#include <string>
#include <vector>

#include "nodalstab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = nodalstab::cli::run_command(args, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
