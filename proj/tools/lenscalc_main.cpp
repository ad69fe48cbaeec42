#include <iostream>

#include "lenscalc/cli.hpp"

int main(int argc, char** argv) {
  return lenscalc::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
