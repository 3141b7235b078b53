#include <iostream>
#include <vector>

#include "sally/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sally::run_command(args, std::cout, std::cerr);
}
