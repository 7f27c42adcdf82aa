#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpslice/integers.hpp"

namespace cpslice {

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

inline const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::Degenerate: return "Degenerate";
  }
  return "?";
}

// A finitely generated free abelian group with an exact symmetric pairing.
// Values are immutable after construction; every operation returns a fresh one.
class IntegralLattice {
 public:
  IntegralLattice() = default;

  explicit IntegralLattice(Mat gram, std::vector<std::string> labels = {})
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    for (const auto& row : gram_)
      if (row.size() != gram_.size())
        throw std::invalid_argument("IntegralLattice: gram matrix must be square");
    if (!is_symmetric(gram_))
      throw std::invalid_argument("IntegralLattice: gram matrix must be symmetric");
    if (!labels_.empty() && labels_.size() != gram_.size())
      throw std::invalid_argument("IntegralLattice: one label per generator");
  }

  std::size_t rank() const { return gram_.size(); }
  const Mat& gram() const { return gram_; }
  const Int& at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Mat gram_;
  std::vector<std::string> labels_;
};

// Sylvester classification from leading principal minors; a singular form is
// Degenerate. The rank-0 lattice is definite of either sign; we report
// PositiveDefinite so that empty connected sums stay legal.
inline Definiteness definiteness(const IntegralLattice& L) {
  std::size_t n = L.rank();
  if (n == 0) return Definiteness::PositiveDefinite;
  std::vector<Int> minors(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat sub(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = L.at(i, j);
    minors[k - 1] = det_exact(std::move(sub));
  }
  if (minors[n - 1] == 0) return Definiteness::Degenerate;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (minors[k - 1] <= 0) pos = false;
    if ((k % 2 == 1 && minors[k - 1] >= 0) || (k % 2 == 0 && minors[k - 1] <= 0)) neg = false;
  }
  if (pos) return Definiteness::PositiveDefinite;
  if (neg) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

inline IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  Mat g = zero_matrix(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.at(i, j);
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    auto la = a.labels(), lb = b.labels();
    la.resize(n, "?");
    lb.resize(m, "?");
    labels = la;
    labels.insert(labels.end(), lb.begin(), lb.end());
  }
  return IntegralLattice(std::move(g), std::move(labels));
}

// The rank-2m pairing [[s*2I, I], [I, A]] in the ordered basis
// u_1..u_m, v_1..v_m; sign +1 gives the positive variant, -1 replaces
// 2I by -2I.
inline IntegralLattice half_integer_block(std::size_t m, const Mat& A, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("half_integer_block: sign must be +1 or -1");
  if (m == 0) throw std::invalid_argument("half_integer_block: m must be positive");
  if (A.size() != m) throw std::invalid_argument("half_integer_block: A must be m x m");
  if (!is_symmetric(A)) throw std::invalid_argument("half_integer_block: A must be symmetric");
  Mat g = zero_matrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g[i][i] = 2 * sign;
    g[i][m + i] = 1;
    g[m + i][i] = 1;
    for (std::size_t j = 0; j < m; ++j) g[m + i][m + j] = A[i][j];
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("v" + std::to_string(i));
  return IntegralLattice(std::move(g), std::move(labels));
}

inline Int determinant(const IntegralLattice& L) { return det_exact(L.gram()); }

}  // namespace cpslice
