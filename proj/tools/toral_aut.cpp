#include <iostream>
#include <string>
#include <vector>

#include "toral/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return toral::run_cli(args, std::cout, std::cerr);
}
