#include <iostream>
#include <string>
#include <vector>

#include "lcdl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcdl::cli::run(args, std::cout, std::cerr);
}
