#include <iostream>
#include <string>
#include <vector>

#include "kary/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kary::run_cli(args, std::cout, std::cerr);
}
