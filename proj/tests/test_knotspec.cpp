#include <catch2/catch_amalgamated.hpp>

#include "cpslice/knotspec.hpp"

using namespace cpslice;

TEST_CASE("parsing the grammar", "[knotspec]") {
  auto k = parse_knot("K(3)#K(5)");
  REQUIRE(k.summands().size() == 2);
  CHECK(k.summands()[0].kind == AtomKind::Twist);
  CHECK(k.summands()[0].a == 3);
  CHECK(k.summands()[1].a == 5);

  auto p = parse_knot("P(3,-5,9)");
  REQUIRE(p.summands().size() == 1);
  CHECK(p.summands()[0].params == std::vector<long long>{3, -5, 9});

  CHECK(parse_knot("U").is_unknot());
  CHECK(parse_knot(" K(2) # U # -T(2,7) ").render() == "K(2)#-T(2,7)");

  auto m = parse_knot("-P(3,-5,9)");
  REQUIRE(m.summands().size() == 1);
  CHECK(m.summands()[0].params == std::vector<long long>{-3, 5, -9});
}

TEST_CASE("parse errors carry positions and constraints", "[knotspec]") {
  CHECK_THROWS_AS(parse_knot("K(0)"), ParseError);
  CHECK_THROWS_AS(parse_knot("K(3"), ParseError);
  CHECK_THROWS_AS(parse_knot("P(2,3,5)"), ParseError);
  CHECK_THROWS_AS(parse_knot("P(3,5)"), ParseError);
  CHECK_THROWS_AS(parse_knot("T(3,5)"), ParseError);
  CHECK_THROWS_AS(parse_knot("T(2,4)"), ParseError);
  CHECK_THROWS_AS(parse_knot("K(3)##K(5)"), ParseError);
  CHECK_THROWS_AS(parse_knot("X(3)"), ParseError);
  CHECK_THROWS_AS(parse_knot(""), ParseError);
  try {
    parse_knot("K(3)#Q(5)");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("render and parse round trip on normalized expressions", "[knotspec]") {
  for (const char* text : {"U", "K(3)", "-K(4)", "K(3)#K(5)", "P(3,-5,9)", "-T(2,9)",
                           "K(1)#-K(2)#P(3,-5,3,-5,3)#T(2,3)"}) {
    auto k = parse_knot(text);
    CHECK(parse_knot(k.render()).render() == k.render());
  }
  // double mirror normalizes away; mirrored pretzels negate parameters
  CHECK(parse_knot("-K(3)").mirror_expr().render() == "K(3)");
  CHECK(parse_knot("-P(3,-5,9)").render() == "P(-3,5,-9)");
}

TEST_CASE("seifert dispatch", "[knotspec]") {
  auto s = seifert_of(parse_knot("K(3)#K(5)"));
  REQUIRE(s);
  CHECK(s->rank() == 4);
  CHECK(signature_of(parse_knot("K(3)#K(5)")) == 0);

  auto m = seifert_of(parse_knot("-T(2,3)"));
  REQUIRE(m);
  CHECK(signature(*m) == 2);

  // mirror commutes with taking Seifert matrices
  auto k = parse_knot("K(3)#P(3,-5,9)");
  auto sm = seifert_of(k.mirror_expr());
  auto ms = mirror(*seifert_of(k));
  REQUIRE(sm);
  CHECK(sm->entries() == ms.entries());
  CHECK(signature(*sm) == -signature(*seifert_of(k)));

  // five-strand pretzels have no Seifert constructor, but keep a signature
  auto big = parse_knot("P(3,-5,3,-5,3)");
  CHECK(!seifert_of(big));
  CHECK(signature_of(big) == 0);

  CHECK(seifert_of(parse_knot("U"))->rank() == 0);
}

TEST_CASE("negative definite fillings", "[knotspec]") {
  auto f = neg_filling_of(parse_knot("-K(4)"));
  REQUIRE(f.lattice);
  CHECK(f.lattice->rank() == 8);
  for (std::size_t i = 0; i + 1 < 8; ++i) CHECK(f.lattice->at(i, i) == -2);
  CHECK(f.lattice->at(7, 7) == -3);

  auto fig9 = neg_filling_of(parse_knot("K(3)#K(5)"));
  REQUIRE(fig9.lattice);
  CHECK(fig9.lattice->rank() == 4);
  CHECK(fig9.lattice->at(0, 0) == -7);
  CHECK(fig9.lattice->at(2, 2) == -11);

  auto torus = neg_filling_of(parse_knot("T(2,3)"));
  CHECK(!torus.lattice);
  CHECK(torus.unsupported_reason.find("torus") != std::string::npos);

  auto pretzel = neg_filling_of(parse_knot("P(3,-5,9)"));
  REQUIRE(pretzel.lattice);
  CHECK(pretzel.lattice->rank() == 12);

  // determinant of the filling equals the knot determinant
  auto k = parse_knot("K(3)#K(5)");
  Int d = determinant(*neg_filling_of(k).lattice);
  CHECK((d < 0 ? -d : d) == knot_determinant(*seifert_of(k)));
}

TEST_CASE("upper rules: twist knots and sums", "[knotspec]") {
  auto r35 = upper_rules(parse_knot("K(3)#K(5)"));
  REQUIRE(r35.cp2);
  CHECK(*r35.cp2 == 4);  // 1 + 3
  REQUIRE(r35.cp2bar);
  CHECK(*r35.cp2bar == 2);

  auto r2 = upper_rules(parse_knot("K(2)"));
  CHECK(*r2.cp2 == 0);
  CHECK(*r2.cp2bar == 0);

  // the paired rule: (p+q) K(3) # p (-K(4)) at p = q = 1
  auto ex47 = upper_rules(parse_knot("K(3)#K(3)#-K(4)"));
  REQUIRE(ex47.cp2);
  CHECK(*ex47.cp2 == 3);  // 2p + q
  REQUIRE(ex47.cp2bar);
  CHECK(*ex47.cp2bar == 2);  // p + q

  // a slice pair: K(3) # -K(3)
  auto pair = upper_rules(parse_knot("K(3)#-K(3)"));
  CHECK(*pair.cp2 == 0);
  CHECK(*pair.cp2bar == 0);
}

TEST_CASE("upper rules: pretzels", "[knotspec]") {
  auto r = upper_rules(parse_knot("P(3,-5,9)"));
  REQUIRE(r.cp2);
  CHECK(*r.cp2 == 1);
  CHECK(r.cp2bar_finite);  // mirrored set has two negatives: finite, uncounted

  auto r59 = upper_rules(parse_knot("P(3,-5,3,-5,3)"));
  REQUIRE(r59.cp2);
  CHECK(*r59.cp2 == 2);

  auto top = upper_rules(parse_knot("P(3,-5,15)"));
  REQUIRE(top.cp2top);
  CHECK(*top.cp2top == 1);

  auto torus = upper_rules(parse_knot("T(2,7)"));
  REQUIRE(torus.cp2);
  CHECK(*torus.cp2 == 3);
  CHECK(!torus.cp2bar);
  CHECK(!torus.cp2bar_finite);

  auto u = upper_rules(parse_knot("U"));
  CHECK(*u.cp2 == 0);
  CHECK(*u.cp2bar == 0);
  CHECK(*u.cp2top == 0);
}
