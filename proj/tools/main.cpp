#include <iostream>

#include "xword/cli.hpp"

int main(int argc, char** argv) {
  return xword::run_cli(argc, argv, std::cout, std::cerr);
}
