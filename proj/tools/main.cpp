#include <iostream>

#include "corad/cli.hpp"

int main(int argc, char** argv) {
  return corad::cli::run(argc, argv, std::cout, std::cerr);
}
