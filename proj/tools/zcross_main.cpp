#include <iostream>

#include "zcross/cli.hpp"

int main(int argc, char** argv) {
  return zcross::cli::run(argc, argv, std::cout, std::cerr);
}
