#include <iostream>
#include <vector>

#include "dgkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dgkit::cli::run(args, std::cout, std::cerr);
}
