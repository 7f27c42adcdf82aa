#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cpslice/hnf.hpp"

using namespace cpslice;

namespace {

bool check_solution(const Mat& m, const std::vector<Int>& b, const std::vector<Int>& x) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += m[i][j] * x[j];
    if (acc != b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("integer systems: known instances", "[hnf]") {
  // 2x = 3 has no integer solution
  CHECK(!solve_integer_system({{Int(2)}}, {Int(3)}));
  // 2x = 4 does
  auto s = solve_integer_system({{Int(2)}}, {Int(4)});
  REQUIRE(s);
  CHECK((*s)[0] == 2);
  // x + y = 1, x - y = 1
  auto s2 = solve_integer_system({{Int(1), Int(1)}, {Int(1), Int(-1)}}, {Int(1), Int(1)});
  REQUIRE(s2);
  CHECK(check_solution({{Int(1), Int(1)}, {Int(1), Int(-1)}}, {Int(1), Int(1)}, *s2));
  // x + y = 1, x - y = 0 forces half-integers
  CHECK(!solve_integer_system({{Int(1), Int(1)}, {Int(1), Int(-1)}}, {Int(1), Int(0)}));
  // inconsistent duplicated rows
  CHECK(!solve_integer_system({{Int(1), Int(1)}, {Int(1), Int(1)}}, {Int(0), Int(1)}));
  // underdetermined: 3x + 5y = 1
  auto s3 = solve_integer_system({{Int(3), Int(5)}}, {Int(1)});
  REQUIRE(s3);
  CHECK(check_solution({{Int(3), Int(5)}}, {Int(1)}, *s3));
}

TEST_CASE("integer systems: randomized round trips", "[hnf]") {
  std::mt19937 rng(23u);
  std::uniform_int_distribution<long long> entry(-5, 5);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    Mat m(rows, std::vector<Int>(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    std::vector<Int> x0(cols);
    for (auto& x : x0) x = entry(rng);
    std::vector<Int> b(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] += m[i][j] * x0[j];
    auto sol = solve_integer_system(m, b);
    REQUIRE(sol);  // solvable by construction
    CHECK(check_solution(m, b, *sol));

    // arbitrary rhs: any reported solution must verify
    std::vector<Int> b2(rows);
    for (auto& v : b2) v = entry(rng);
    auto sol2 = solve_integer_system(m, b2);
    if (sol2) CHECK(check_solution(m, b2, *sol2));
  }
}
