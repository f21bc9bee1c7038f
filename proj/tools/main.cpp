#include <iostream>
#include <string>
#include <vector>

#include "homlong/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homlong::cli::run(args, std::cout, std::cerr);
}
