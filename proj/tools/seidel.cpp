#include <iostream>
#include <string>
#include <vector>

#include "seidel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seidel::cli::run(args, std::cout, std::cerr);
}
