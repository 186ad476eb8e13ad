#include <iostream>
#include <string>
#include <vector>

#include "eq5/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eq5::cli::run(args, std::cout, std::cerr);
}
