#include <iostream>

#include "rackbench/cli.hpp"

int main(int argc, char** argv) {
  return rackbench::run_cli(argc, argv, std::cout, std::cerr);
}
