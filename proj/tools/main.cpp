#include <iostream>
#include <string>
#include <vector>

#include "cdpic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cdpic::cli::run(args, std::cout, std::cerr);
}
