#include <iostream>

#include "thompson/cli.hpp"

int main(int argc, char** argv) {
  return thompson::cli::run(argc, argv, std::cout, std::cerr);
}
