#include <iostream>
#include <string>
#include <vector>

#include "inertia/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inertia::cli::main_entry(args, std::cout, std::cerr);
}
