#include <iostream>

#include "gqca/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gqca::cli::run(args, std::cout, std::cerr);
}
