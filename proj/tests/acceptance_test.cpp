#include <iostream>

#include "reflift/acceptance.hpp"

int main() {
  const auto results = reflift::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::cout << reflift::format_result(r) << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
