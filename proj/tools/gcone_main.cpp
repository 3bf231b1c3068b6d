#include <iostream>
#include <string>
#include <vector>

#include "gcone/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcone::run_cli(args, std::cout, std::cerr);
}
