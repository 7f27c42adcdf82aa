#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cpslice {

// All lattice and polynomial arithmetic is exact. cpp_int keeps determinants
// and normal-form pivots from overflowing at the ranks we handle (<= ~40).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Mat = std::vector<std::vector<Int>>;

inline int sign_of(const Int& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

inline int sign_of(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

// Floor of sqrt for nonnegative values.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// 1/q as an exact rational; q may be negative
inline Rat reciprocal_of(long long q) {
  if (q == 0) throw std::invalid_argument("reciprocal_of: zero");
  Rat r(Int(1), Int(q < 0 ? -q : q));
  return q < 0 ? Rat(-r) : r;
}

inline Mat zero_matrix(std::size_t rows, std::size_t cols) {
  return Mat(rows, std::vector<Int>(cols, Int(0)));
}

inline Mat identity_matrix(std::size_t n) {
  Mat m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline bool is_symmetric(const Mat& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

inline Mat transpose(const Mat& m) {
  if (m.empty()) return m;
  Mat t = zero_matrix(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = a.empty() ? 0 : a[0].size(), p = b.empty() ? 0 : b[0].size();
  if (k != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat c = zero_matrix(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int det_exact(Mat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;  // empty product
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Bareiss
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Signature (#positive - #negative eigenvalues) of a symmetric integer matrix,
// by congruence diagonalization over the rationals.
inline int symmetric_signature(const Mat& sym) {
  if (!is_symmetric(sym)) throw std::invalid_argument("symmetric_signature: matrix not symmetric");
  std::size_t n = sym.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(sym[i][j]);
  int sig = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        std::swap(m[i], m[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
      } else {
        // all remaining diagonal entries vanish; pull in an off-diagonal one
        j = i + 1;
        while (j < n && m[i][j] == 0) ++j;
        if (j == n) continue;  // zero row: rank drops, contributes nothing
        for (std::size_t r = 0; r < n; ++r) m[i][r] += m[j][r];
        for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
      }
    }
    Rat piv = m[i][i];
    sig += sign_of(piv);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      Rat f = m[r][i] / piv;
      for (std::size_t c2 = 0; c2 < n; ++c2) m[r][c2] -= f * m[i][c2];
      for (std::size_t c2 = 0; c2 < n; ++c2) m[c2][r] -= f * m[c2][i];
    }
  }
  return sig;
}

}  // namespace cpslice
