#include <cstdlib>
#include <iostream>

#include "polyzcl/acceptance.hpp"

int main(int argc, char** argv) {
  int threads = 0;
  if (argc > 1) threads = std::atoi(argv[1]);
  auto results = polyzcl::run_acceptance(threads);
  return polyzcl::report_acceptance(results, std::cout) ? 0 : 1;
}
