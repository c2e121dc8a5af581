#include <iostream>
#include <string>
#include <vector>

#include "mengerian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mengerian::cli::main(args, std::cin, std::cout, std::cerr);
}
