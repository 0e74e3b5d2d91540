#include <iostream>
#include <string>
#include <vector>

#include "stringy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return stringy::cli::run(args, std::cout, std::cerr);
}
