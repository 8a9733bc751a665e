#include <iostream>

#include "g2/cli.hpp"

int main(int argc, char** argv) {
  return g2::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
