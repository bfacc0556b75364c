#include <iostream>
#include <string>
#include <vector>

#include "skelcodes/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skelcodes::cli::run(args, std::cout, std::cerr);
}
