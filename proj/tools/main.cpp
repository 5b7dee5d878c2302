#include <iostream>

#include "wordlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wordlab::run(args, std::cout, std::cerr);
}
