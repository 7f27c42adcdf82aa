#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "cpslice/seifert.hpp"

using namespace cpslice;

TEST_CASE("twist knot Seifert matrices", "[seifert]") {
  CHECK(twist_seifert(3).entries() == Mat{{Int(1), Int(1)}, {Int(0), Int(-3)}});
  CHECK(twist_seifert(1).entries() == Mat{{Int(1), Int(1)}, {Int(0), Int(-1)}});
  CHECK(signature(twist_seifert(2)) == 0);
  CHECK(knot_determinant(twist_seifert(2)) == 9);
  CHECK_THROWS_AS(twist_seifert(0), std::invalid_argument);
  for (long long a = 1; a <= 10; ++a) {
    CHECK(signature(twist_seifert(a)) == 0);
    CHECK(knot_determinant(twist_seifert(a)) == 4 * a + 1);
  }
}

TEST_CASE("pretzel Seifert matrices pin the published instance", "[seifert]") {
  // (a,b,c) = (p, -p-2k, 3p+8k-2) must give [[p+3k-1, (-p-1)/2-k], [(-p+1)/2-k, -k]]
  for (long long p : {3LL, 5LL, 7LL})
    for (long long k : {1LL, 2LL, 3LL}) {
      auto a = pretzel3_seifert(p, -p - 2 * k, 3 * p + 8 * k - 2);
      CHECK(a.at(0, 0) == p + 3 * k - 1);
      CHECK(a.at(0, 1) == (-p - 1) / 2 - k);
      CHECK(a.at(1, 0) == (-p + 1) / 2 - k);
      CHECK(a.at(1, 1) == -k);
    }
  CHECK(signature(pretzel3_seifert(3, -5, 15)) == 0);
  CHECK(knot_determinant(pretzel3_seifert(3, -5, 15)) == 45);  // (4k+p)^2 - 4k at (3,1)
  CHECK(signature(pretzel3_seifert(3, -5, 9)) == 0);
  CHECK(signature(pretzel3_seifert(3, 5, 7)) == 2);
  CHECK_THROWS_AS(pretzel3_seifert(2, 3, 5), std::invalid_argument);
}

TEST_CASE("torus knot band matrices", "[seifert]") {
  CHECK(torus2_seifert(1).entries() == Mat{{Int(-1), Int(1)}, {Int(0), Int(-1)}});
  CHECK(signature(torus2_seifert(1)) == -2);
  CHECK(signature(torus2_seifert(2)) == -4);
  for (long long m = 1; m <= 5; ++m) {
    CHECK(signature(torus2_seifert(m)) == -2 * static_cast<int>(m));
    CHECK(knot_determinant(torus2_seifert(m)) == 2 * m + 1);
  }
  CHECK_THROWS_AS(torus2_seifert(0), std::invalid_argument);
}

TEST_CASE("connected sums and mirrors", "[seifert]") {
  auto s = connected_sum(twist_seifert(3), twist_seifert(5));
  CHECK(s.rank() == 4);
  CHECK(s.at(0, 1) == 1);
  CHECK(s.at(0, 2) == 0);
  CHECK(signature(mirror(torus2_seifert(1))) == 2);
  auto a = pretzel3_seifert(3, -5, 9);
  CHECK(mirror(mirror(a)).entries() == a.entries());
  CHECK(signature(mirror(a)) == -signature(a));
  CHECK(equal_up_to_units(alexander(mirror(a)), alexander(a)));
  CHECK(knot_determinant(s) == knot_determinant(twist_seifert(3)) * knot_determinant(twist_seifert(5)));
}

TEST_CASE("alexander polynomials", "[seifert]") {
  // derived oracle: the closed 3-strand form with pq+qr+pr = -33
  CHECK(equal_up_to_units(alexander(pretzel3_seifert(3, -5, 9)),
                          LaurentPolynomial({Int(-8), Int(17), Int(-8)}, 0)));
  CHECK(equal_up_to_units(pretzel3_alexander(3, -5, 9), LaurentPolynomial({Int(-8), Int(17), Int(-8)}, -1)));
  CHECK(pretzel3_alexander(1, 1, 1) == LaurentPolynomial({Int(1), Int(-1), Int(1)}, -1));
  CHECK(pretzel3_alexander(3, -5, 15).evaluate(-1) == 45);  // |Delta(-1)| = (4k+p)^2 - 4k at (3,1)

  for (long long a = 1; a <= 6; ++a) {
    auto poly = alexander(twist_seifert(a));
    CHECK(poly.is_symmetric_poly());
    Int at1 = poly.evaluate(1);
    CHECK((at1 == 1 || at1 == -1));
  }
  auto unknot = SeifertMatrix();
  CHECK(alexander(unknot) == LaurentPolynomial::constant(1));
}

TEST_CASE("tristram-levine samples", "[seifert]") {
  auto a = torus2_seifert(1);
  CHECK(tristram_levine(a, std::complex<double>(-1.0, 0.0)) == signature(a));
  // near t = 1 the form degenerates toward zero signature
  auto near_one = tristram_levine(a, std::polar(1.0, 0.3));
  REQUIRE(near_one.has_value());
  CHECK(*near_one == 0);
  // at the Alexander root of the trefoil (angle 2*pi/6) the guard fires
  auto at_root = tristram_levine(a, std::polar(1.0, 2.0 * M_PI / 6.0));
  CHECK(!at_root.has_value());
  for (long long m = 1; m <= 3; ++m)
    CHECK(tristram_levine(torus2_seifert(m), std::complex<double>(-1.0, 0.0)) ==
          signature(torus2_seifert(m)));
}

TEST_CASE("pretzel signature formula", "[seifert]") {
  CHECK(bryant_signature({3, -5, 9}) == 0);
  CHECK(bryant_signature({3, 5, 7}) == 2);
  CHECK(bryant_signature({-3, -5, -7}) == -2);
  CHECK_THROWS_AS(bryant_signature({3, -5}), std::invalid_argument);
  CHECK_THROWS_AS(bryant_signature({3, -5, 4}), std::invalid_argument);
  CHECK_THROWS_AS(bryant_signature({3, -5, 0}), std::invalid_argument);
  CHECK(bryant_signature({3, -3, -9}) == 1 - 2 + 1);  // reciprocal sum -1/9 < 0
  CHECK(bryant_signature({3, 3, 3, -3, -3}) == 3 - 2 - 1);  // reciprocal sum 1/3 > 0
}

TEST_CASE("signature gate", "[seifert]") {
  // connected sum of m right-handed trefoils: flat lower bound m
  for (int m = 1; m <= 4; ++m) {
    SeifertMatrix a;
    for (int i = 0; i < m; ++i) a = connected_sum(a, torus2_seifert(1));
    auto gate = signature_gate(a, 16);
    CHECK(gate.sigma_at_minus_one == -2 * m);
    CHECK(gate.lower_cp2_top >= m);
    CHECK(gate.cp2bar_infinite);
    CHECK(!gate.cp2_infinite);
  }
  // right-handed trefoil: infinite on the reversed side
  auto tref = signature_gate(torus2_seifert(1), 32);
  CHECK(tref.cp2bar_infinite);
  // twist knots: no obstruction from the signature function
  for (long long a = 1; a <= 8; ++a) {
    auto gate = signature_gate(twist_seifert(a), 32);
    CHECK(!gate.cp2_infinite);
    CHECK(!gate.cp2bar_infinite);
    CHECK(gate.lower_cp2_top == 0);
    CHECK(gate.lower_cp2bar_top == 0);
  }
}

TEST_CASE("pretzel oracle equivalence on a spot range", "[seifert]") {
  for (long long p = -7; p <= 7; p += 2)
    for (long long q = -7; q <= 7; q += 2)
      for (long long r = -7; r <= 7; r += 2) {
        CAPTURE(p, q, r);
        CHECK(bryant_signature({p, q, r}) == signature(pretzel3_seifert(p, q, r)));
        CHECK(equal_up_to_units(alexander(pretzel3_seifert(p, q, r)), pretzel3_alexander(p, q, r)));
      }
}
