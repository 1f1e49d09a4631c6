#include <iostream>

#include "p5col/cli.hpp"

int main(int argc, char** argv) {
  return p5col::run_cli(argc, argv, std::cout, std::cerr);
}
