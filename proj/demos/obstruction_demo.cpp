// Minimal library walk-through: build the definite filling of a twist-knot
// sum, sweep the embedding obstruction, and print the certified bounds.

#include <iostream>

#include "cpslice/cpslice.hpp"

int main() {
  using namespace cpslice;

  auto knot = parse_knot("K(3)#K(5)");
  std::cout << "knot: " << knot.render() << "\n";

  auto filling = neg_filling_of(knot);
  std::cout << "filling rank " << filling.lattice->rank() << ", det "
            << determinant(*filling.lattice).str() << "\n";

  for (int m = 0; m <= 2; ++m) {
    auto out = donaldson_obstruction(*filling.lattice, m);
    std::cout << "  m = " << m << ": " << to_string(out.verdict) << " (" << out.nodes
              << " nodes)\n";
    if (out.witness) {
      std::cout << "    witness images:";
      for (const auto& v : out.witness->gen_images) {
        std::cout << " (";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }

  auto rep = compute_bounds(knot);
  std::cout << "u_cp2    " << rep.cp2.status() << " [" << rep.cp2.lower << ", "
            << (rep.cp2.upper ? std::to_string(*rep.cp2.upper) : "?") << "]\n";
  std::cout << "u_cp2bar " << rep.cp2bar.status() << " [" << rep.cp2bar.lower << ", "
            << (rep.cp2bar.upper ? std::to_string(*rep.cp2bar.upper) : "?") << "]\n";
  return 0;
}
