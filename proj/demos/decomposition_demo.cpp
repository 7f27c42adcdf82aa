// Rank-one decompositions of a Seifert form: search a pretzel family member
// and run the genus-one procedure on a twist knot.

#include <iostream>

#include "cpslice/cpslice.hpp"

int main() {
  using namespace cpslice;

  auto a = pretzel3_seifert(3, -5, 15);
  auto found = thm14_search(a);
  if (found.status == SearchStatus::Found) {
    const auto& d = *found.decomposition;
    std::cout << "found a decomposition with n = " << d.n() << "\n";
    for (const auto& c : d.cs) {
      std::cout << "  c = (";
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i].str();
      std::cout << ")\n";
    }
    std::cout << "  verified: " << (verify_decomposition(a, d) ? "yes" : "no") << "\n";
  }

  auto g1 = genus_one_top_bound(twist_seifert(3));
  std::cout << "genus-one bound for the a = 3 twist knot: "
            << (g1.infinite ? std::string("infinite")
                            : "n = " + std::to_string(g1.decomposition->n()))
            << "\n";
  return 0;
}
