#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return sl2relax::cli::run(argc, argv, std::cout, std::cerr);
}
