#include <iostream>

#include "fstruct/cli.hpp"

int main(int argc, char** argv) {
  return fstruct::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
