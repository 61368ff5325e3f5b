#include <iostream>
#include <string>
#include <vector>

#include "drury/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drury::run_cli(args, std::cout, std::cerr);
}
