#include <iostream>

#include "hqft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hqft::run_cli(args, std::cout, std::cerr);
}
