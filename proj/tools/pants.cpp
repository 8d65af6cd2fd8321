#include <iostream>
#include <string>
#include <vector>

#include "pants/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pants::cli::run(std::move(args), std::cout, std::cerr);
}
