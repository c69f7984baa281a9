#include <cstdlib>
#include <cstring>
#include <iostream>

#include "disclosure/app/suite.hpp"

int main(int argc, char** argv) {
  disclosure::app::SuiteOptions options;
  options.show_numbers = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    if (std::strcmp(argv[i], "--terse") == 0) options.show_numbers = false;
    if (std::strcmp(argv[i], "--item") == 0 && i + 1 < argc) options.only = std::atoi(argv[++i]);
  }
  const auto results = disclosure::app::run_suite(options, std::cout);
  if (results.empty()) return 1;
  return disclosure::app::first_failure(results) == 0 ? 0 : 1;
}
