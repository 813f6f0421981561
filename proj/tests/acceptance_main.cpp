// Release gate: runs every acceptance criterion and prints one line each.
#include <cstring>
#include <iostream>

#include "focal/repro.hpp"

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  auto results = focal::run_acceptance_suite(quick, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " criteria passed\n";
  return 0;
}
