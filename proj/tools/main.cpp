#include <iostream>
#include <string>
#include <vector>

#include "trirain/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trirain::cli::run(args, std::cout, std::cerr);
}
