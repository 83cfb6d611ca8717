#include <iostream>

#include "hjac/cli.hpp"

int main(int argc, char** argv) {
  return hjac::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
