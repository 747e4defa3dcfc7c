#include <iostream>

#include "spherelab/cli.hpp"

int main(int argc, char** argv) {
  return spherelab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
