// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return adasort::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
