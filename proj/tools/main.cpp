#include <iostream>
#include <string>
#include <vector>

#include "scottq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scottq::run_cli(args, std::cout, std::cerr);
}
