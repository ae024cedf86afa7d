#include <iostream>
#include <string>
#include <vector>

#include "ixdelay/cli.hpp"

int main(int argc, char** argv) {
  return ixdelay::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
