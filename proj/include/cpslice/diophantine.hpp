#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cpslice/integers.hpp"
#include "cpslice/seifert.hpp"

namespace cpslice {

// --- sums of squares ------------------------------------------------------

// Smallest-lexicographic representation n = k^2 + l^2 + m^2 with
// k <= l <= m, or nullopt exactly when n has the excluded form 4^a(8b+7).
// The shape test and the enumeration double-check each other.
inline std::optional<std::array<long long, 3>> three_square(long long n) {
  if (n < 0) throw std::invalid_argument("three_square: need n >= 0");
  long long stripped = n;
  while (stripped % 4 == 0 && stripped > 0) stripped /= 4;
  bool excluded = stripped % 8 == 7;
  std::optional<std::array<long long, 3>> found;
  for (long long k = 0; k * k * 3 <= n && !found; ++k)
    for (long long l = k; k * k + 2 * l * l <= n; ++l) {
      long long rest = n - k * k - l * l;
      long long m = isqrt64(rest);
      if (m * m == rest && m >= l) {
        found = std::array<long long, 3>{k, l, m};
        break;
      }
    }
  if (excluded == found.has_value())
    throw std::logic_error("three_square: shape test and enumeration disagree");
  return found;
}

// n = k^2 + l^2 + m^2 + p^2 with k <= l <= m <= p, smallest lexicographic.
// Always exists (Lagrange).
inline std::array<long long, 4> four_square(long long n) {
  if (n < 0) throw std::invalid_argument("four_square: need n >= 0");
  for (long long k = 0; 4 * k * k <= n; ++k)
    for (long long l = k; k * k + 3 * l * l <= n; ++l)
      for (long long m = l; k * k + l * l + 2 * m * m <= n; ++m) {
        long long rest = n - k * k - l * l - m * m;
        long long p = isqrt64(rest);
        if (p * p == rest && p >= m) return {k, l, m, p};
      }
  throw std::logic_error("four_square: no representation found");
}

// --- the pretzel slicing system --------------------------------------------

// One block of unknowns per negative parameter: a_i^j weights the i-th chain,
// b_l^j the l-th square -2 class.
struct PretzelWitness {
  std::vector<std::vector<long long>> a;  // a[j][i], j over negatives, i over positives
  std::vector<std::vector<long long>> b;  // b[j][l], l < m
};

enum class PretzelVerdict { Solvable, Unsolvable };

struct PretzelConditionResult {
  PretzelVerdict verdict = PretzelVerdict::Unsolvable;
  std::optional<PretzelWitness> witness;
};

namespace detail {

inline void check_pretzel_hypotheses(const std::vector<long long>& positives,
                                     const std::vector<long long>& negatives) {
  if (negatives.empty() || positives.size() != negatives.size() + 1)
    throw std::invalid_argument(
        "pretzel_condition: need k+1 positive and k negative parameters, k >= 1");
  Rat sum = 0;
  for (long long p : positives) {
    if (p < 3 || p % 2 == 0)
      throw std::invalid_argument("pretzel_condition: positive parameters must be odd and >= 3");
    sum += reciprocal_of(p);
  }
  for (long long q : negatives) {
    if (q > -3 || q % 2 == 0)
      throw std::invalid_argument("pretzel_condition: negative parameters must be odd and <= -3");
    sum += reciprocal_of(q);
  }
  // the vanishing-signature hypothesis, via the pretzel signature formula
  if (!(sum > 0)) throw std::invalid_argument("pretzel_condition: signature is not zero");
}

}  // namespace detail

// Exhaustive solve of the two slicing conditions for an odd pretzel with k+1
// positive and k negative parameters, against m positive projective summands:
//   (1) per negative j: sum_i a_i^j = 1 and sum_i (a_i^j)^2 p_i
//       + 2 sum_l (b_l^j)^2 = |q_j|;
//   (2) per pair j != j': sum_i a_i^j a_i^j' p_i + 2 sum_l b_l^j b_l^j' = 0.
// Unsolvable certifies the knot is not H-slice there; Solvable returns the
// lexicographically smallest witness and certifies nothing.
inline PretzelConditionResult pretzel_condition(const std::vector<long long>& positives,
                                                const std::vector<long long>& negatives, int m) {
  if (m < 0) throw std::invalid_argument("pretzel_condition: need m >= 0");
  detail::check_pretzel_hypotheses(positives, negatives);
  std::size_t kp = positives.size();
  std::size_t kn = negatives.size();

  // per-j candidate blocks satisfying condition (1), in lexicographic order
  struct Block {
    std::vector<long long> a;
    std::vector<long long> b;
  };
  std::vector<std::vector<Block>> blocks(kn);
  for (std::size_t j = 0; j < kn; ++j) {
    long long target = -negatives[j];
    std::vector<long long> a(kp, 0), b(static_cast<std::size_t>(m), 0);
    struct Gen {
      const std::vector<long long>& ps;
      long long target;
      int m;
      std::vector<Block>& out;
      std::vector<long long>& a;
      std::vector<long long>& b;
      void gen_a(std::size_t i, long long sum, long long quad) {
        if (quad > target) return;
        if (i == ps.size()) {
          if (sum != 1) return;
          long long rest = target - quad;
          if (rest % 2 != 0) return;  // 2*sum(b^2) is even; parity must match
          gen_b(0, rest / 2);
          return;
        }
        long long cap = isqrt64((target - quad) / ps[i]);
        for (long long v = -cap; v <= cap; ++v) {
          a[i] = v;
          gen_a(i + 1, sum + v, quad + v * v * ps[i]);
        }
        a[i] = 0;
      }
      void gen_b(std::size_t l, long long rest) {
        if (l == static_cast<std::size_t>(m)) {
          if (rest == 0) out.push_back(Block{a, b});
          return;
        }
        long long cap = isqrt64(rest);
        for (long long v = -cap; v <= cap; ++v) {
          b[l] = v;
          gen_b(l + 1, rest - v * v);
        }
        b[l] = 0;
      }
    } gen{positives, target, m, blocks[j], a, b};
    gen.gen_a(0, 0, 0);
    if (blocks[j].empty()) return {PretzelVerdict::Unsolvable, std::nullopt};
  }

  // depth-first over block choices, checking the cross conditions
  std::vector<std::size_t> chosen(kn, 0);
  struct Cross {
    const std::vector<long long>& ps;
    const std::vector<std::vector<Block>>& blocks;
    std::vector<std::size_t>& chosen;
    std::size_t kn;
    bool run(std::size_t j) {
      if (j == kn) return true;
      for (std::size_t c = 0; c < blocks[j].size(); ++c) {
        const Block& bj = blocks[j][c];
        bool ok = true;
        for (std::size_t j2 = 0; j2 < j && ok; ++j2) {
          const Block& b2 = blocks[j2][chosen[j2]];
          long long acc = 0;
          for (std::size_t i = 0; i < ps.size(); ++i) acc += bj.a[i] * b2.a[i] * ps[i];
          for (std::size_t l = 0; l < bj.b.size(); ++l) acc += 2 * bj.b[l] * b2.b[l];
          if (acc != 0) ok = false;
        }
        if (!ok) continue;
        chosen[j] = c;
        if (run(j + 1)) return true;
      }
      return false;
    }
  } cross{positives, blocks, chosen, kn};

  if (!cross.run(0)) return {PretzelVerdict::Unsolvable, std::nullopt};
  PretzelWitness w;
  for (std::size_t j = 0; j < kn; ++j) {
    w.a.push_back(blocks[j][chosen[j]].a);
    w.b.push_back(blocks[j][chosen[j]].b);
  }
  // re-verify the witness exactly before handing it out
  for (std::size_t j = 0; j < kn; ++j) {
    long long sum = 0, quad = 0;
    for (std::size_t i = 0; i < kp; ++i) {
      sum += w.a[j][i];
      quad += w.a[j][i] * w.a[j][i] * positives[i];
    }
    for (long long v : w.b[j]) quad += 2 * v * v;
    if (sum != 1 || quad != -negatives[j])
      throw std::logic_error("pretzel_condition: witness failed re-verification");
    for (std::size_t j2 = 0; j2 < j; ++j2) {
      long long acc = 0;
      for (std::size_t i = 0; i < kp; ++i) acc += w.a[j][i] * w.a[j2][i] * positives[i];
      for (std::size_t l = 0; l < w.b[j].size(); ++l) acc += 2 * w.b[j][l] * w.b[j2][l];
      if (acc != 0) throw std::logic_error("pretzel_condition: witness failed re-verification");
    }
  }
  return {PretzelVerdict::Solvable, std::move(w)};
}

// --- syntactic slicing classifications for odd 3-strand pretzels -----------

struct SliceClassification {
  bool positively_slice = false;
  std::string reason;
};

namespace detail {
inline void check_3strand_params(long long p, long long q, long long r, const char* who) {
  for (long long v : {p, q, r}) {
    if (v % 2 == 0) throw std::invalid_argument(std::string(who) + ": parameters must be odd");
    if (v == 1 || v == -1)
      throw std::invalid_argument(std::string(who) + ": parameters +-1 are outside the classification");
  }
}
}  // namespace detail

// A 3-strand odd pretzel (parameters never +-1) is positively slice exactly
// when it has at least two negative parameters, or exactly one negative
// parameter whose magnitude is at least one of the positive ones.
inline SliceClassification positively_slice_class(long long p, long long q, long long r) {
  detail::check_3strand_params(p, q, r, "positively_slice_class");
  std::vector<long long> neg, pos;
  for (long long v : {p, q, r}) (v < 0 ? neg : pos).push_back(v);
  if (neg.size() >= 2)
    return {true, "at least two negative parameters: grow one to cancel another"};
  if (neg.size() == 1) {
    long long n = -neg[0];
    for (long long y : pos)
      if (n >= y) {
        long long k = (n - y) / 2;
        return {true, "matches P(-q-2k, q, r) with q = " + std::to_string(y) +
                          ", k = " + std::to_string(k)};
      }
    return {false, "single negative parameter smaller than both positive ones"};
  }
  return {false, "all parameters positive: signature is positive"};
}

// Biprojectively slice (positively and negatively): the parameter set is
// +-{a, b, -a-c} for some a, b, c > 0.
inline bool biprojectively_slice_3strand(long long p, long long q, long long r) {
  detail::check_3strand_params(p, q, r, "biprojectively_slice_3strand");
  auto matches = [](std::vector<long long> v) {
    // exactly one negative, strictly larger in magnitude than some positive
    std::vector<long long> neg, pos;
    for (long long x : v) (x < 0 ? neg : pos).push_back(x);
    if (neg.size() != 1) return false;
    long long n = -neg[0];
    for (long long y : pos)
      if (n > y) return true;
    return false;
  };
  std::vector<long long> plain = {p, q, r};
  std::vector<long long> flipped = {-p, -q, -r};
  return matches(plain) || matches(flipped);
}

}  // namespace cpslice
