#include <catch2/catch_amalgamated.hpp>

#include "cpslice/laurent.hpp"

using namespace cpslice;

TEST_CASE("laurent arithmetic and normalization", "[laurent]") {
  LaurentPolynomial p({Int(-8), Int(17), Int(-8)}, -1);  // -8/t + 17 - 8t
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 1);
  CHECK(p.is_symmetric_poly());
  CHECK(p.evaluate(1) == 1);
  CHECK(p.evaluate(-1) == 33);

  LaurentPolynomial n = p.normalized();
  CHECK(n.min_degree() == 0);
  CHECK(n.coeffs().front() > 0);
  CHECK(equal_up_to_units(p, n));
  CHECK(!equal_up_to_units(p, p + LaurentPolynomial::constant(1)));

  CHECK((p - p).is_zero());
  CHECK((p * LaurentPolynomial::monomial(Int(1), 5)).min_degree() == 4);
  CHECK(LaurentPolynomial::monomial(Int(-1), 3).is_unit_monomial());
  CHECK(!p.is_unit_monomial());
}

TEST_CASE("trimming and zero handling", "[laurent]") {
  LaurentPolynomial z({Int(0), Int(0)}, 5);
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  LaurentPolynomial t({Int(0), Int(1), Int(0)}, -2);
  CHECK(t.min_degree() == -1);
  CHECK(t.coeffs().size() == 1);
}

TEST_CASE("polynomial determinants", "[laurent]") {
  // det [[t, 1], [1, t]] = t^2 - 1
  std::vector<std::vector<LaurentPolynomial>> m = {
      {LaurentPolynomial::monomial(Int(1), 1), LaurentPolynomial::constant(1)},
      {LaurentPolynomial::constant(1), LaurentPolynomial::monomial(Int(1), 1)}};
  LaurentPolynomial d = poly_det(m);
  CHECK(d == LaurentPolynomial({Int(-1), Int(0), Int(1)}, 0));
  CHECK(poly_det({}) == LaurentPolynomial::constant(1));
}

TEST_CASE("exact division", "[laurent]") {
  LaurentPolynomial a({Int(1), Int(2), Int(1)}, 0);  // (t+1)^2
  LaurentPolynomial b({Int(1), Int(1)}, 0);
  CHECK(div_exact(a, b) == b);
  CHECK_THROWS_AS(div_exact(LaurentPolynomial({Int(1), Int(1), Int(1)}, 0), b), std::logic_error);
}
