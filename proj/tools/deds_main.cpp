#include <iostream>

#include "deds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deds::run_cli(args, std::cout, std::cerr);
}
