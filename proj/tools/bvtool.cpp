#include <iostream>

#include "bv/cli.hpp"

int main(int argc, char** argv) {
  return bv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
