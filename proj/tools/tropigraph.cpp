#include <iostream>
#include <string>
#include <vector>

#include "tropigraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropigraph::run_cli(args, std::cin, std::cout, std::cerr);
}
