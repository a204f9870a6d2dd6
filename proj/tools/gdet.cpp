#include <iostream>

#include "gdet/cli.hpp"

int main(int argc, char** argv) {
  return gdet::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
