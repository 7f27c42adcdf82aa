#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "cpslice/plumbing.hpp"

using namespace cpslice;

namespace {

// evaluate [a_1, ..., a_n]^- as an exact fraction
std::pair<Int, Int> eval_neg_cf(const std::vector<long long>& a) {
  Int num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // a_i - den/num
    Int nnum = Int(a[i]) * num - den;
    den = num;
    num = nnum;
  }
  return {num, den};
}

std::pair<Int, Int> eval_pos_cf(const std::vector<long long>& c) {
  Int num = c.back(), den = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    Int nnum = Int(c[i]) * num + den;
    den = num;
    num = nnum;
  }
  return {num, den};
}

}  // namespace

TEST_CASE("negative continued fractions", "[plumbing]") {
  CHECK(neg_continued_fraction(13, 2) == std::vector<long long>{7, 2});
  CHECK(neg_continued_fraction(13, 11) == std::vector<long long>{2, 2, 2, 2, 2, 3});
  CHECK(neg_continued_fraction(2, 1) == std::vector<long long>{2});
  CHECK_THROWS_AS(neg_continued_fraction(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(neg_continued_fraction(2, 3), std::invalid_argument);
}

TEST_CASE("positive continued fractions", "[plumbing]") {
  CHECK(pos_continued_fraction(13, 2) == std::vector<long long>{6, 2});
  CHECK(pos_continued_fraction(5, 2) == std::vector<long long>{2, 2});
  CHECK(pos_continued_fraction(3, 1) == std::vector<long long>{3});
}

TEST_CASE("continued fractions reconstruct p/q for all small coprime pairs", "[plumbing]") {
  for (long long p = 2; p <= 200; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto neg = neg_continued_fraction(p, q);
      for (long long t : neg) CHECK(t >= 2);
      auto [nn, nd] = eval_neg_cf(neg);
      CHECK(nn == p);
      CHECK(nd == q);
      auto pos = pos_continued_fraction(p, q);
      CHECK(pos.back() >= 2);
      auto [pn, pd] = eval_pos_cf(pos);
      CHECK(pn == p);
      CHECK(pd == q);
    }
}

TEST_CASE("linear plumbings", "[plumbing]") {
  CHECK(linear_plumbing({-7, -2}, +1).gram() == Mat{{Int(-7), Int(1)}, {Int(1), Int(-2)}});
  auto pos = linear_plumbing({2, 2, 2, 2, 2, 3}, -1);
  CHECK(pos.rank() == 6);
  CHECK(definiteness(pos) == Definiteness::PositiveDefinite);
  CHECK(linear_plumbing({-2}, +1).gram() == Mat{{Int(-2)}});
  CHECK(linear_plumbing({-2}, -1).gram() == Mat{{Int(-2)}});
}

TEST_CASE("lens space fillings", "[plumbing]") {
  auto f13 = lens_fillings(13, 2);
  CHECK(f13.neg_def.gram() == Mat{{Int(-7), Int(1)}, {Int(1), Int(-2)}});
  CHECK(f13.pos_def.rank() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(f13.pos_def.at(i, i) == (i == 5 ? 3 : 2));

  auto f2 = lens_fillings(2, 1);
  CHECK(f2.neg_def.gram() == Mat{{Int(-2)}});
  CHECK(f2.pos_def.gram() == Mat{{Int(2)}});

  auto f21 = lens_fillings(21, 2);
  CHECK(f21.neg_def.gram() == Mat{{Int(-11), Int(1)}, {Int(1), Int(-2)}});

  for (long long p = 2; p <= 60; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto f = lens_fillings(p, q);
      Int dn = determinant(f.neg_def), dp = determinant(f.pos_def);
      CHECK((dn < 0 ? -dn : dn) == p);
      CHECK((dp < 0 ? -dp : dp) == p);
      CHECK(definiteness(f.neg_def) == Definiteness::NegativeDefinite);
      CHECK(definiteness(f.pos_def) == Definiteness::PositiveDefinite);
    }
}

TEST_CASE("twist knot covers", "[plumbing]") {
  CHECK(twist_cover(3).p == 13);
  CHECK(twist_cover(3).q == 2);
  CHECK(twist_cover(5).p == 21);
  CHECK(twist_cover(1).p == 5);
  CHECK_THROWS_AS(twist_cover(0), std::invalid_argument);
  // -L(p, q) = L(p, p - q)
  LensSpace l = twist_cover(3).reversed();
  CHECK(l.p == 13);
  CHECK(l.q == 11);
}

TEST_CASE("pretzel plumbings", "[plumbing]") {
  auto l = pretzel_plumbing({3, 9}, {-5});
  CHECK(l.rank() == 12);
  // chains of length 2 and 8, then the center of weight -(k+1) = -2, then the leaf
  CHECK(l.at(10, 10) == -2);
  CHECK(l.at(11, 11) == -5);
  CHECK(l.at(1, 10) == 1);   // end of the first chain meets the center
  CHECK(l.at(9, 10) == 1);   // end of the second chain meets the center
  CHECK(l.at(11, 10) == 1);  // leaf meets the center
  CHECK(l.at(0, 10) == 0);   // interior chain vertex does not

  auto l2 = pretzel_plumbing({3, 3, 3}, {-5, -5});
  CHECK(l2.rank() == 9);
  CHECK(l2.at(6, 6) == -3);
  CHECK(l2.at(7, 7) == -5);
  CHECK(l2.at(8, 8) == -5);

  CHECK(pretzel_plumbing({3, 3}, {-3}).rank() == 6);  // 1/3 + 1/3 - 1/3 > 0

  CHECK_THROWS_WITH(pretzel_plumbing({3}, {}), Catch::Matchers::ContainsSubstring("k+1"));
  CHECK_THROWS_WITH(pretzel_plumbing({4, 3}, {-5}), Catch::Matchers::ContainsSubstring("odd"));
  CHECK_THROWS_WITH(pretzel_plumbing({3, 3}, {-1}), Catch::Matchers::ContainsSubstring("-3"));
  CHECK_THROWS_WITH(pretzel_plumbing({13, 13}, {-5}),
                    Catch::Matchers::ContainsSubstring("reciprocals"));
}

TEST_CASE("pretzel plumbing is negative definite across a small sweep", "[plumbing]") {
  // all admissible shapes with total positive weight <= 30
  for (long long p1 = 3; p1 <= 13; p1 += 2)
    for (long long p2 = p1; p2 <= 13; p2 += 2) {
      if (p1 + p2 > 30) continue;
      for (long long q = -3; q >= -13; q -= 2) {
        Rat sum = reciprocal_of(p1) + reciprocal_of(p2) + reciprocal_of(q);
        if (!(sum > 0)) continue;
        auto l = pretzel_plumbing({p1, p2}, {q});
        CHECK(definiteness(l) == Definiteness::NegativeDefinite);
      }
    }
}

TEST_CASE("pretzel plumbing is invariant under parameter permutations", "[plumbing]") {
  // mutation invariance at the lattice level: permuting positives (and
  // negatives) permutes chains (and leaves), i.e. relabels generators
  auto a = pretzel_plumbing({3, 9}, {-5});
  auto b = pretzel_plumbing({9, 3}, {-5});
  REQUIRE(a.rank() == b.rank());
  // chains: a = [x1(2), x2(8)], b = [x1(8), x2(2)]; build the relabeling
  std::vector<std::size_t> perm(12);
  for (std::size_t j = 0; j < 8; ++j) perm[j] = 2 + j;  // b chain 1 -> a chain 2
  for (std::size_t j = 0; j < 2; ++j) perm[8 + j] = j;  // b chain 2 -> a chain 1
  perm[10] = 10;
  perm[11] = 11;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) CHECK(b.at(i, j) == a.at(perm[i], perm[j]));

  auto c = pretzel_plumbing({3, 3, 3}, {-5, -7});
  auto d = pretzel_plumbing({3, 3, 3}, {-7, -5});
  std::vector<std::size_t> perm2 = {0, 1, 2, 3, 4, 5, 6, 8, 7};
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK(d.at(i, j) == c.at(perm2[i], perm2[j]));
}

TEST_CASE("footnote identity: (4a+1)/(4a-1) expands to twos then a three", "[plumbing]") {
  for (long long a = 1; a <= 20; ++a) {
    std::vector<long long> want(static_cast<std::size_t>(2 * a - 1), 2);
    want.push_back(3);
    CHECK(neg_continued_fraction(4 * a + 1, 4 * a - 1) == want);
  }
}
