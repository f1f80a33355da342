#include <iostream>

#include "einf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return einf::cli::run(args, std::cout, std::cerr);
}
