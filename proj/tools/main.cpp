#include <iostream>

#include "straightedge/cli.hpp"

int main(int argc, char** argv) {
  return straightedge::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
