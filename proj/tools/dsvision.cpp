#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return dsv::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
