#include <iostream>
#include <string>
#include <vector>

#include "ivg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ivg::run(args, std::cout, std::cerr);
}
