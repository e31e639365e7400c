#include <iostream>
#include <string>
#include <vector>

#include "inaccess/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inaccess::run(args, std::cout, std::cerr);
}
