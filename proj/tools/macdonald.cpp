#include <iostream>

#include "macdonald/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mac::run_cli(args, std::cout, std::cerr);
}
