#include <iostream>
#include <string>
#include <vector>

#include "sl2bar/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return sl2bar::run_cli(args, std::cout, std::cerr);
}
