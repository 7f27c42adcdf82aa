#pragma once

#include <optional>
#include <vector>

#include "cpslice/integers.hpp"

namespace cpslice {

// Solve M x = b over the integers (M is k x n). Column echelonization by
// unimodular column operations, then forward substitution with divisibility
// checks. Returns one solution or nullopt when none exists.
inline std::optional<std::vector<Int>> solve_integer_system(const Mat& m, const std::vector<Int>& b) {
  std::size_t rows = m.size();
  if (b.size() != rows) throw std::invalid_argument("solve_integer_system: rhs size mismatch");
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("solve_integer_system: ragged matrix");

  if (rows == 0) return std::vector<Int>(cols, Int(0));

  Mat a = m;
  Mat v = identity_matrix(cols);
  std::vector<std::size_t> pivot_col_of_row(rows, static_cast<std::size_t>(-1));
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // gcd-collapse row r over columns lead..cols-1
    while (true) {
      std::size_t nz = lead;
      while (nz < cols && a[r][nz] == 0) ++nz;
      if (nz == cols) break;
      if (nz != lead) {
        for (std::size_t i = r; i < rows; ++i) std::swap(a[i][nz], a[i][lead]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][nz], v[i][lead]);
      }
      bool reduced = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        // one Euclid step: c -= floor(a_rc / a_rlead) * lead
        Int qq = a[r][c] / a[r][lead];
        if (qq != 0) {
          for (std::size_t i = r; i < rows; ++i) a[i][c] -= qq * a[i][lead];
          for (std::size_t i = 0; i < cols; ++i) v[i][c] -= qq * v[i][lead];
        }
        if (a[r][c] != 0) reduced = false;
      }
      if (reduced) break;
      // smallest nonzero remainder becomes the new pivot candidate
      std::size_t best = lead;
      for (std::size_t c = lead; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        Int ab = a[r][c] < 0 ? Int(-a[r][c]) : a[r][c];
        Int bb = a[r][best] < 0 ? Int(-a[r][best]) : a[r][best];
        if (a[r][best] == 0 || ab < bb) best = c;
      }
      if (best != lead) {
        for (std::size_t i = r; i < rows; ++i) std::swap(a[i][best], a[i][lead]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][best], v[i][lead]);
      }
    }
    if (a[r][lead] != 0) {
      pivot_col_of_row[r] = lead;
      ++lead;
    }
  }

  // forward substitution on the echelon form
  std::vector<Int> y(cols, Int(0));
  for (std::size_t r = 0; r < rows; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < lead; ++c) acc += a[r][c] * y[c];
    Int rem = b[r] - acc;
    std::size_t pc = pivot_col_of_row[r];
    if (pc == static_cast<std::size_t>(-1)) {
      if (rem != 0) return std::nullopt;
    } else {
      if (rem % a[r][pc] != 0) return std::nullopt;
      y[pc] = rem / a[r][pc];
    }
  }
  // x = V y
  std::vector<Int> x(cols, Int(0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      if (y[c] == 0) continue;
      x[i] += v[i][c] * y[c];
    }
  return x;
}

}  // namespace cpslice
