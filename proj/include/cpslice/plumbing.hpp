#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cpslice/integers.hpp"
#include "cpslice/lattice.hpp"

namespace cpslice {

struct LensSpace {
  long long p = 2;
  long long q = 1;
  int orientation = +1;

  LensSpace(long long p_, long long q_, int orientation_ = +1)
      : p(p_), q(q_), orientation(orientation_) {
    if (p <= 1 || q <= 0 || q >= p) throw std::invalid_argument("LensSpace: need p > q > 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("LensSpace: need gcd(p, q) = 1");
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("LensSpace: orientation is +-1");
  }

  // -L(p, q) = L(p, p-q)
  LensSpace reversed() const { return LensSpace(p, p - q, -orientation); }
};

inline void check_fraction_args(long long p, long long q, const char* who) {
  if (!(p > q && q > 0)) throw std::invalid_argument(std::string(who) + ": need p > q > 0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument(std::string(who) + ": need gcd(p, q) = 1");
}

// p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)) with every a_i >= 2; this expansion
// is unique.
inline std::vector<long long> neg_continued_fraction(long long p, long long q) {
  check_fraction_args(p, q, "neg_continued_fraction");
  std::vector<long long> out;
  while (q > 0) {
    long long a = (p + q - 1) / q;  // ceil(p/q)
    out.push_back(a);
    long long r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

// p/q = c_1 + 1/(c_2 + 1/(... + 1/c_n)), all c_i >= 1 and c_n >= 2
// (the canonical form; plain Euclid already terminates this way for p > q).
inline std::vector<long long> pos_continued_fraction(long long p, long long q) {
  check_fraction_args(p, q, "pos_continued_fraction");
  std::vector<long long> out;
  while (q > 0) {
    out.push_back(p / q);
    long long r = p % q;
    p = q;
    q = r;
  }
  return out;
}

// Tridiagonal Gram: the weights on the diagonal, edge_sign on the
// off-diagonals. Adjacent generators of a linear plumbing intersect in
// edge_sign.
inline IntegralLattice linear_plumbing(const std::vector<long long>& weights, int edge_sign) {
  if (weights.empty()) throw std::invalid_argument("linear_plumbing: need at least one vertex");
  if (edge_sign != 1 && edge_sign != -1) throw std::invalid_argument("linear_plumbing: edge_sign is +-1");
  std::size_t n = weights.size();
  Mat g = zero_matrix(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = weights[i];
    if (i + 1 < n) {
      g[i][i + 1] = edge_sign;
      g[i + 1][i] = edge_sign;
    }
    labels.push_back("x" + std::to_string(i + 1));
  }
  return IntegralLattice(std::move(g), std::move(labels));
}

struct LensFillings {
  IntegralLattice neg_def;  // boundary L(p,q)
  IntegralLattice pos_def;  // boundary L(p,q)
};

// Definite fillings of L(p,q): the negative one from the expansion of p/q,
// the positive one by orientation-reversing the negative filling of
// -L(p,q) = L(p, p-q). Both have |det| = p.
inline LensFillings lens_fillings(long long p, long long q) {
  check_fraction_args(p, q, "lens_fillings");
  auto neg_weights = neg_continued_fraction(p, q);
  for (auto& w : neg_weights) w = -w;
  IntegralLattice neg = linear_plumbing(neg_weights, +1);

  auto pos_weights = neg_continued_fraction(p, p - q);
  for (auto& w : pos_weights) w = -w;
  IntegralLattice pre = linear_plumbing(pos_weights, +1);
  Mat flipped = pre.gram();
  for (auto& row : flipped)
    for (auto& x : row) x = -x;
  IntegralLattice pos(std::move(flipped), pre.labels());

  if (definiteness(neg) != Definiteness::NegativeDefinite)
    throw std::logic_error("lens_fillings: negative filling failed the definiteness check");
  if (definiteness(pos) != Definiteness::PositiveDefinite)
    throw std::logic_error("lens_fillings: positive filling failed the definiteness check");
  Int dn = determinant(neg), dp = determinant(pos);
  if ((dn < 0 ? -dn : dn) != p || (dp < 0 ? -dp : dp) != p)
    throw std::logic_error("lens_fillings: |det| must equal p");
  return LensFillings{std::move(neg), std::move(pos)};
}

// Double branched cover of the twist knot K_a: the lens space L(4a+1, 2).
inline LensSpace twist_cover(long long a) {
  if (a < 1) throw std::invalid_argument("twist_cover: need a >= 1");
  return LensSpace(4 * a + 1, 2, +1);
}

// Star-shaped negative definite plumbing bounding the double branched cover
// of P(p_1..p_{k+1}, q_1..q_k): for each positive parameter a chain of
// p_i - 1 vertices of weight -2, a central vertex of weight -(k+1), and one
// leaf of weight q_j per negative parameter. Adjacency pairing +1. Generators
// are ordered chains first (input order), then the center, then the leaves.
inline IntegralLattice pretzel_plumbing(const std::vector<long long>& positives,
                                        const std::vector<long long>& negatives) {
  if (negatives.empty() || positives.size() != negatives.size() + 1)
    throw std::invalid_argument(
        "pretzel_plumbing: need k+1 positive and k negative parameters, k >= 1");
  Rat recip_sum = 0;
  for (long long p : positives) {
    if (p < 3 || p % 2 == 0)
      throw std::invalid_argument("pretzel_plumbing: positive parameters must be odd and >= 3");
    recip_sum += reciprocal_of(p);
  }
  for (long long q : negatives) {
    if (q > -3 || q % 2 == 0)
      throw std::invalid_argument("pretzel_plumbing: negative parameters must be odd and <= -3");
    recip_sum += reciprocal_of(q);
  }
  if (!(recip_sum > 0))
    throw std::invalid_argument(
        "pretzel_plumbing: need sum of reciprocals > 0 (no definite plumbing otherwise)");

  std::size_t k = negatives.size();
  std::size_t rank = 0;
  for (long long p : positives) rank += static_cast<std::size_t>(p);
  Mat g = zero_matrix(rank, rank);
  std::vector<std::string> labels(rank);

  std::size_t idx = 0;
  std::vector<std::size_t> chain_ends;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    std::size_t len = static_cast<std::size_t>(positives[i] - 1);
    for (std::size_t j = 0; j < len; ++j) {
      g[idx][idx] = -2;
      labels[idx] = "x" + std::to_string(i + 1) + "^" + std::to_string(j + 1);
      if (j > 0) {
        g[idx][idx - 1] = 1;
        g[idx - 1][idx] = 1;
      }
      ++idx;
    }
    chain_ends.push_back(idx - 1);
  }
  std::size_t center = idx;
  g[center][center] = -Int(static_cast<long long>(k) + 1);
  labels[center] = "y";
  for (std::size_t e : chain_ends) {
    g[center][e] = 1;
    g[e][center] = 1;
  }
  ++idx;
  for (std::size_t j = 0; j < k; ++j) {
    g[idx][idx] = negatives[j];
    labels[idx] = "z" + std::to_string(j + 1);
    g[idx][center] = 1;
    g[center][idx] = 1;
    ++idx;
  }

  IntegralLattice L(std::move(g), std::move(labels));
  if (definiteness(L) != Definiteness::NegativeDefinite)
    throw std::logic_error("pretzel_plumbing: plumbing failed the negative definiteness check");
  return L;
}

}  // namespace cpslice
