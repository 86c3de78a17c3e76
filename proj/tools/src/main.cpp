#include <iostream>
#include <string>
#include <vector>

#include "dcp_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dcp::cli::run(args, std::cout, std::cerr);
}
