#include <iostream>
#include <string>
#include <vector>

#include "fracdyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fracdyn::run_cli(args, std::cout, std::cerr);
}
