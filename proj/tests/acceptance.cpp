#include <iostream>

#include "chordal/selftest.hpp"

// One line per acceptance property; non-zero exit if any fails.
int main() {
  bool all = true;
  for (const auto& r : chordal::run_selftest({})) {
    std::cout << chordal::summary_line(r) << std::endl;
    all = all && r.ok();
  }
  return all ? 0 : 1;
}
