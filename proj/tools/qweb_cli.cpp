#include <iostream>

#include "qweb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qweb::cli::run(args, std::cin, std::cout, std::cerr);
}
