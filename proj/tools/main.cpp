#include <iostream>
#include <string>
#include <vector>

#include "qcong/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcong::dispatch(args, std::cout, std::cerr);
}
