#include <iostream>

#include "coarsekit/cli.hpp"

int main(int argc, char** argv) {
  return coarsekit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
