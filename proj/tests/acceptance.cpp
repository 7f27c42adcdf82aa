// Dedicated acceptance binary: runs every reproduction row, one pass/fail
// line per criterion, nonzero exit on any failure.

#include <iostream>

#include "cpslice/cpslice.hpp"

int main() {
  int failures = cpslice::run_reproduction("all", std::cout);
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance row(s) failed\n";
  return 1;
}
