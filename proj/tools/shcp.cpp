#include <iostream>
#include <string>
#include <vector>

#include "shcp/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shcp::run_command(args, std::cout, std::cerr);
}
