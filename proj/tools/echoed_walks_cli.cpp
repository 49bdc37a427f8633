// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "ew/cli.hpp"

int main(int argc, char** argv) {
  return ew::cli::run(argc, argv, std::cout, std::cerr);
}
