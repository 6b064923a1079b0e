#include <iostream>
#include <string>
#include <vector>

#include "tmwords/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tmwords::run(args, std::cout, std::cerr);
}
