#include "moduli/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return moduli::cli::run(argc, argv, std::cout, std::cerr);
}
