#include <iostream>
#include <string>
#include <vector>

#include "unrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return unrep::run_cli(args, std::cout, std::cerr);
}
