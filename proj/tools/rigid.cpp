#include <iostream>

#include "rigid/cli.hpp"

int main(int argc, char** argv) {
  return rigid::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
