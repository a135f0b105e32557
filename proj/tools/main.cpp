#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const int code = xsect::cli::run(argc, argv, std::cout, std::cerr);
  std::cout.flush();
  return code;
}
