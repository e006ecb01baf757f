#include <iostream>
#include <string>
#include <vector>

#include "irrdecomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return irrdecomp::cli_main(args, std::cout, std::cerr);
}
