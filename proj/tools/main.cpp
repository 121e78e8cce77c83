#include <iostream>
#include <string>
#include <vector>

#include "remmatch/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return remmatch::run_cli(args, std::cin, std::cout, std::cerr);
}
