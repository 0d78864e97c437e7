#include <iostream>
#include <string>
#include <vector>

#include "foel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return foel::cli::run(args, std::cout, std::cerr);
}
