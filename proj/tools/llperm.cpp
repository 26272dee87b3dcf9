#include <iostream>
#include <string>
#include <vector>

#include "llperm/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return llperm::cli::run(args, std::cout, std::cerr);
}
