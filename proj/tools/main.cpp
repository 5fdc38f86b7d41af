#include <iostream>
#include <string>
#include <vector>

#include "qrep_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrep::cli::main_entry(args, std::cout, std::cerr);
}
