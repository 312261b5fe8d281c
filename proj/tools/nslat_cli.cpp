#include <iostream>

#include "nslat/cli.hpp"

int main(int argc, char **argv) {
  return nslat::cli::run(argc, argv, std::cout, std::cerr);
}
