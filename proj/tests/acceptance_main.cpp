#include <cstdlib>
#include <iostream>

#include "terracini/acceptance.hpp"

int main() {
  const auto results = terracini::run_acceptance_suite(std::cout);
  return terracini::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
