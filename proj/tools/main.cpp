#include <iostream>
#include <string>
#include <vector>

#include "facticity/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return facticity::run_cli(args, std::cout, std::cerr);
}
