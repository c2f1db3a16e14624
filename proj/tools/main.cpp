#include <iostream>

#include "spline_affine/cli.hpp"

int main(int argc, char** argv) {
  return spline_affine::cli_main(argc, argv, std::cout, std::cerr);
}
