#include <iostream>
#include <string>
#include <vector>

#include "drc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return drc::cli::run(args, std::cout, std::cerr);
}
