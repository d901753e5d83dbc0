#include <iostream>

#include "pstab_cli/app.hpp"

int main(int argc, char** argv) {
  return pstab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
