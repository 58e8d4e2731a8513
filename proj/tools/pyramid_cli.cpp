#include <iostream>

#include "pyramid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pyramid::run_command(args, std::cout, std::cerr);
}
