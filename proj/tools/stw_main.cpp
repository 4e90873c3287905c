#include <iostream>
#include <vector>

#include "stw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stw::cli::run_command(args, std::cout, std::cerr);
}
