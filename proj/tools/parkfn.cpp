#include <iostream>
#include <string>
#include <vector>

#include "parkfn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return parkfn::cli::run(args, std::cout, std::cerr);
}
