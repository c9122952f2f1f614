#include "wn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return wn::execute_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
