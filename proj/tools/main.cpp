#include <iostream>

#include "oscut/cli.hpp"

int main(int argc, char** argv) {
  return oscut::cli_main(argc, argv, std::cout, std::cerr);
}
