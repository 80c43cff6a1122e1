#include <iostream>
#include <string>
#include <vector>

#include "perfcubes/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return perfcubes::cli::run(args, std::cout, std::cerr);
}
