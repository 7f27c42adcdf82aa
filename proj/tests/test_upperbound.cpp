#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cpslice/upperbound.hpp"

using namespace cpslice;

TEST_CASE("verify_decomposition: the published genus-one witness", "[upperbound]") {
  auto a = pretzel3_seifert(3, -5, 15);
  Decomposition d;
  d.basis_change = Mat{{Int(1), Int(0)}, {Int(1), Int(1)}};  // {x, y} -> {x + y, y}
  d.cs = {{Int(1), Int(4)}};
  d.b = Mat{{Int(0), Int(0)}, {Int(1), Int(15)}};
  CHECK(verify_decomposition(a, d));

  // empty decomposition works exactly for unit Alexander polynomials
  Decomposition empty;
  empty.b = a.entries();
  CHECK(!verify_decomposition(a, empty));

  // any non-monomial det(tB - B^T) must fail
  Decomposition bad = d;
  bad.b = Mat{{Int(1), Int(0)}, {Int(1), Int(15)}};
  CHECK(!verify_decomposition(a, bad));

  // non-unimodular basis changes are rejected
  Decomposition squish = d;
  squish.basis_change = Mat{{Int(2), Int(0)}, {Int(0), Int(1)}};
  CHECK(!verify_decomposition(a, squish));
}

TEST_CASE("thm14_search finds the rank-one witnesses for the flat-vs-smooth family", "[upperbound]") {
  for (auto [p, k] : std::vector<std::pair<long long, long long>>{{3, 1}, {3, 2}}) {
    auto a = pretzel3_seifert(p, -p - 2 * k, 3 * p + 8 * k - 2);
    auto res = thm14_search(a);
    REQUIRE(res.status == SearchStatus::Found);
    CHECK(res.decomposition->n() == 1);
    CHECK(verify_decomposition(a, *res.decomposition));
  }
  // slice stevedore: whatever comes back must verify
  auto res = thm14_search(twist_seifert(2), 2, 6, 1, 500000);
  if (res.status == SearchStatus::Found) CHECK(verify_decomposition(twist_seifert(2), *res.decomposition));
  // unit Alexander input: n = 0 immediately
  SeifertMatrix unit(Mat{{Int(0), Int(1)}, {Int(0), Int(4)}});
  auto res0 = thm14_search(unit);
  REQUIRE(res0.status == SearchStatus::Found);
  CHECK(res0.decomposition->n() == 0);
}

TEST_CASE("thm14_search symmetry reduction agrees with tiny unreduced sweeps", "[upperbound]") {
  // unreduced check at tiny bounds: enumerate all c in [-2,2]^2 directly
  auto a = twist_seifert(3);
  bool unreduced_found = false;
  for (long long x = -2; x <= 2 && !unreduced_found; ++x)
    for (long long y = -2; y <= 2; ++y) {
      Mat b = a.entries();
      b[0][0] += x * x;
      b[0][1] += x * y;
      b[1][0] += x * y;
      b[1][1] += y * y;
      if (alexander_of_matrix(b).is_unit_monomial()) {
        unreduced_found = true;
        break;
      }
    }
  auto reduced = thm14_search(a, 1, 2, 0, 100000);
  CHECK(unreduced_found == (reduced.status == SearchStatus::Found && reduced.decomposition->n() == 1));
}

TEST_CASE("framing form values", "[upperbound]") {
  SeifertMatrix a1(Mat{{Int(-3), Int(1)}, {Int(0), Int(0)}});
  CHECK(framing_form(a1, 1, 0) == -3);
  SeifertMatrix a2(Mat{{Int(0), Int(2)}, {Int(1), Int(2)}});  // a=0, b=1, c=2
  CHECK(framing_form(a2, -2, 1) == -4);
  SeifertMatrix a3(Mat{{Int(1), Int(1)}, {Int(0), Int(-1)}});  // a=1, b=0, c=-1
  CHECK(framing_form(a3, -1, 2) == -5);
  CHECK_THROWS_AS(framing_form(SeifertMatrix(), 0, 0), std::invalid_argument);
}

TEST_CASE("genus-one bound: the three outcomes", "[upperbound]") {
  // unit Alexander polynomial
  SeifertMatrix unit(Mat{{Int(0), Int(1)}, {Int(0), Int(7)}});
  auto b0 = genus_one_top_bound(unit);
  CHECK(!b0.infinite);
  CHECK(b0.decomposition->n() == 0);

  // positive definite symmetrization
  auto pos = pretzel3_seifert(3, 5, 7);
  REQUIRE(signature(pos) == 2);
  CHECK(genus_one_top_bound(pos).infinite);

  // generic case: a verified decomposition with at most four summands
  auto b3 = genus_one_top_bound(twist_seifert(3));
  REQUIRE(!b3.infinite);
  REQUIRE(b3.decomposition);
  CHECK(b3.decomposition->n() <= 4);
  CHECK(verify_decomposition(twist_seifert(3), *b3.decomposition));
}

TEST_CASE("genus-one bound: seeded random suite", "[upperbound]") {
  std::mt19937 rng(99u);
  std::uniform_int_distribution<long long> entry(-9, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 250; ++i) {
    long long a = entry(rng), b = entry(rng), c = entry(rng);
    Mat m = coin(rng) ? Mat{{Int(a), Int(b + 1)}, {Int(b), Int(c)}}
                      : Mat{{Int(a), Int(b)}, {Int(b + 1), Int(c)}};
    SeifertMatrix s(m);
    CAPTURE(a, b, c);
    auto out = genus_one_top_bound(s);
    if (signature(s) == 2) {
      CHECK(out.infinite);
    } else {
      REQUIRE(out.decomposition);
      CHECK(out.decomposition->n() <= 4);
      CHECK(verify_decomposition(s, *out.decomposition));
    }
  }
}

TEST_CASE("the emitted tail matrix always has monomial twisted determinant", "[upperbound]") {
  for (long long v = -30; v <= 30; ++v) {
    Mat b = {{Int(0), Int(1)}, {Int(0), Int(v)}};
    CHECK(alexander_of_matrix(b).is_unit_monomial());
  }
}
