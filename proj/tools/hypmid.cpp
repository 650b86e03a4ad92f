#include <iostream>

#include "hypmid/cli.hpp"

int main(int argc, char** argv) {
  return hypmid::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
