#include <iostream>
#include <string>
#include <vector>

#include "etaq/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return etaq::cli::run(args, std::cout, std::cerr);
}
