#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cpslice/hnf.hpp"
#include "cpslice/integers.hpp"
#include "cpslice/lattice.hpp"

namespace cpslice {

enum class ObstructionVerdict { Obstructed, Inconclusive, BudgetExceeded };

inline const char* to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::Obstructed: return "Obstructed";
    case ObstructionVerdict::Inconclusive: return "Inconclusive";
    case ObstructionVerdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

// A full solution of the embedding problem: images of the lattice generators
// and of the m extra square -2 classes in (Z^N, -Id), plus for each j an
// integer vector w_j pairing 1 with u_j and 0 with everything else assigned.
struct EmbeddingWitness {
  int target_dim = 0;
  std::vector<std::vector<long long>> gen_images;  // original generator order
  std::vector<std::vector<long long>> u_images;
  std::vector<std::vector<Int>> w_certificates;
};

struct ObstructionOutcome {
  ObstructionVerdict verdict = ObstructionVerdict::Obstructed;
  std::optional<EmbeddingWitness> witness;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

constexpr std::uint64_t kDefaultNodeBudget = 100000000ull;
constexpr int kMaxTargetDim = 64;

// Independent re-check of a witness, by plain double loops in exact
// arithmetic. Deliberately shares nothing with the search.
inline bool verify_witness(const IntegralLattice& g, int m, const EmbeddingWitness& w) {
  std::size_t r = g.rank();
  if (w.gen_images.size() != r) return false;
  if (w.u_images.size() != static_cast<std::size_t>(m)) return false;
  if (w.w_certificates.size() != static_cast<std::size_t>(m)) return false;
  std::size_t n = static_cast<std::size_t>(w.target_dim);
  auto pair_ll = [n](const std::vector<long long>& x, const std::vector<long long>& y) {
    Int acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc -= Int(x[k]) * Int(y[k]);
    return acc;
  };
  auto pair_big = [n](const std::vector<long long>& x, const std::vector<Int>& y) {
    Int acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc -= Int(x[k]) * y[k];
    return acc;
  };
  for (const auto& v : w.gen_images)
    if (v.size() != n) return false;
  for (const auto& v : w.u_images)
    if (v.size() != n) return false;
  for (const auto& v : w.w_certificates)
    if (v.size() != n) return false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (pair_ll(w.gen_images[i], w.gen_images[j]) != g.at(i, j)) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (pair_ll(w.u_images[i], w.u_images[j]) != (i == j ? -2 : 0)) return false;
    for (std::size_t t = 0; t < r; ++t)
      if (pair_ll(w.u_images[i], w.gen_images[t]) != 0) return false;
  }
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i)
      if (pair_big(w.u_images[i], w.w_certificates[j]) != (i == j ? 1 : 0)) return false;
    for (std::size_t t = 0; t < r; ++t)
      if (pair_big(w.gen_images[t], w.w_certificates[j]) != 0) return false;
  }
  return true;
}

namespace detail {

// Backtracking search for an isometric embedding of a negative definite
// lattice into (Z^N, -Id) together with m orthogonal square -2 classes and
// their integer duals. Symmetry of the target under signed coordinate
// permutations is cut down in two sound ways:
//   - coordinates untouched by the assigned prefix are interchangeable and
//     sign-free, so each new image ends in a canonical tail: positive,
//     non-increasing entries on fresh coordinates;
//   - touched coordinates whose columns (entries across the assigned prefix)
//     are identical are interchangeable, so entries of a new image must be
//     non-increasing along each class of equal columns.
// Both rules quotient by a subgroup of the stabilizer of the prefix, so a
// full solution survives in canonical form whenever one exists; the oracle
// tests cross-check this against the unreduced search.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const IntegralLattice& g, int m, std::uint64_t budget, bool reduce)
      : lattice_(g), m_(m), budget_(budget), reduce_(reduce) {
    r_ = static_cast<int>(g.rank());
    n_ = r_ + 2 * m_;
    if (n_ > kMaxTargetDim)
      throw std::invalid_argument("donaldson_obstruction: target dimension above supported cap");
    build_slots();
  }

  ObstructionOutcome run() {
    auto start = std::chrono::steady_clock::now();
    ObstructionOutcome out;
    if (n_ == 0 || slots_.empty()) {
      // rank 0, m = 0: the empty embedding
      out.verdict = ObstructionVerdict::Inconclusive;
      out.witness = make_witness();
      out.nodes = 0;
    } else {
      img_.assign(slots_.size(), std::vector<int>(static_cast<std::size_t>(n_), 0));
      hi_ = reduce_ ? 0 : n_;
      found_ = false;
      exceeded_ = false;
      nodes_ = 0;
      extend(0);
      if (found_) {
        out.verdict = ObstructionVerdict::Inconclusive;
        out.witness = std::move(witness_);
      } else if (exceeded_) {
        out.verdict = ObstructionVerdict::BudgetExceeded;
      } else {
        out.verdict = ObstructionVerdict::Obstructed;
      }
      out.nodes = nodes_;
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  struct Slot {
    bool is_u = false;
    int index = 0;      // generator index or u index
    long long norm = 0; // dot(img, img) in the standard metric
  };

  void build_slots() {
    // generator order: increasing norm, then preferring adjacency to the
    // already ordered prefix (keeps plumbing chains contiguous)
    std::vector<int> gens(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) gens[static_cast<std::size_t>(i)] = i;
    std::vector<bool> placed(static_cast<std::size_t>(r_), false);
    std::vector<int> ordered;
    for (int step = 0; step < r_; ++step) {
      int best = -1;
      long long best_norm = 0;
      bool best_adj = false;
      for (int i = 0; i < r_; ++i) {
        if (placed[static_cast<std::size_t>(i)]) continue;
        long long norm = -static_cast<long long>(lattice_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
        if (norm < 1 || norm > 10000)
          throw std::invalid_argument("donaldson_obstruction: generator norm out of supported range");
        bool adj = false;
        for (int p : ordered)
          if (lattice_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(p)) != 0) adj = true;
        if (best < 0 || norm < best_norm || (norm == best_norm && adj && !best_adj)) {
          best = i;
          best_norm = norm;
          best_adj = adj;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      ordered.push_back(best);
    }
    // square -2 classes join right after the square -2 generators, matching
    // the staging of the hand proofs; larger norms follow
    for (int i : ordered) {
      long long norm = -static_cast<long long>(lattice_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
      if (norm <= 2) slots_.push_back({false, i, norm});
    }
    for (int j = 0; j < m_; ++j) slots_.push_back({true, j, 2});
    for (int i : ordered) {
      long long norm = -static_cast<long long>(lattice_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
      if (norm > 2) slots_.push_back({false, i, norm});
    }
    // pairwise requirements
    std::size_t k = slots_.size();
    req_.assign(k, std::vector<long long>(k, 0));
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t s = 0; s < k; ++s) {
        if (t == s) continue;
        const Slot& a = slots_[t];
        const Slot& b = slots_[s];
        if (!a.is_u && !b.is_u)
          req_[t][s] = -static_cast<long long>(
              lattice_.at(static_cast<std::size_t>(a.index), static_cast<std::size_t>(b.index)));
        else
          req_[t][s] = 0;  // u classes pair trivially with everything else
      }
  }

  bool budget_hit() {
    if (nodes_ >= budget_) {
      exceeded_ = true;
      return true;
    }
    return false;
  }

  // w_j must pair 1 with u_j and 0 with every other assigned image; with only
  // a prefix assigned this is a relaxation, so failure already kills the
  // whole branch.
  bool duals_solvable(std::size_t assigned) {
    int u_count = 0;
    for (std::size_t s = 0; s < assigned; ++s)
      if (slots_[s].is_u) ++u_count;
    if (u_count == 0) return true;
    Mat rows;
    std::vector<int> u_row(static_cast<std::size_t>(m_), -1);
    for (std::size_t s = 0; s < assigned; ++s) {
      std::vector<Int> row(static_cast<std::size_t>(n_));
      for (int c = 0; c < n_; ++c) row[static_cast<std::size_t>(c)] = img_[s][static_cast<std::size_t>(c)];
      if (slots_[s].is_u) u_row[static_cast<std::size_t>(slots_[s].index)] = static_cast<int>(rows.size());
      rows.push_back(std::move(row));
    }
    for (int j = 0; j < m_; ++j) {
      if (u_row[static_cast<std::size_t>(j)] < 0) continue;
      std::vector<Int> rhs(rows.size(), Int(0));
      rhs[static_cast<std::size_t>(u_row[static_cast<std::size_t>(j)])] = -1;  // dot(u_j, w_j) = -1
      if (!solve_integer_system(rows, rhs)) return false;
    }
    return true;
  }

  std::optional<std::vector<std::vector<Int>>> solve_all_duals() {
    Mat rows;
    std::vector<int> u_row(static_cast<std::size_t>(m_), -1);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      std::vector<Int> row(static_cast<std::size_t>(n_));
      for (int c = 0; c < n_; ++c) row[static_cast<std::size_t>(c)] = img_[s][static_cast<std::size_t>(c)];
      if (slots_[s].is_u) u_row[static_cast<std::size_t>(slots_[s].index)] = static_cast<int>(rows.size());
      rows.push_back(std::move(row));
    }
    std::vector<std::vector<Int>> ws;
    for (int j = 0; j < m_; ++j) {
      std::vector<Int> rhs(rows.size(), Int(0));
      rhs[static_cast<std::size_t>(u_row[static_cast<std::size_t>(j)])] = -1;
      auto sol = solve_integer_system(rows, rhs);
      if (!sol) return std::nullopt;
      ws.push_back(std::move(*sol));
    }
    return ws;
  }

  EmbeddingWitness make_witness() {
    EmbeddingWitness w;
    w.target_dim = n_;
    w.gen_images.assign(static_cast<std::size_t>(r_), std::vector<long long>(static_cast<std::size_t>(n_), 0));
    w.u_images.assign(static_cast<std::size_t>(m_), std::vector<long long>(static_cast<std::size_t>(n_), 0));
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      auto& dst = slots_[s].is_u ? w.u_images[static_cast<std::size_t>(slots_[s].index)]
                                 : w.gen_images[static_cast<std::size_t>(slots_[s].index)];
      for (int c = 0; c < n_; ++c) dst[static_cast<std::size_t>(c)] = img_[s][static_cast<std::size_t>(c)];
    }
    if (m_ > 0) {
      auto ws = solve_all_duals();
      w.w_certificates = std::move(*ws);  // only called after duals_solvable passed
    }
    return w;
  }

  void extend(std::size_t t) {
    if (found_ || exceeded_) return;
    if (t == slots_.size()) {
      if (m_ > 0 && !solve_all_duals()) return;
      witness_ = make_witness();
      found_ = true;
      return;
    }
    long long norm = slots_[t].norm;
    int bound = static_cast<int>(isqrt64(norm));
    // previous coordinate with an identical column across the assigned
    // prefix, for the non-increasing rule
    std::vector<int> prev_same(static_cast<std::size_t>(hi_), -1);
    if (reduce_ && t > 0) {
      std::unordered_map<std::uint64_t, int> last;
      last.reserve(static_cast<std::size_t>(hi_) * 2);
      for (int k = 0; k < hi_; ++k) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t s = 0; s < t; ++s) {
          h ^= static_cast<std::uint64_t>(img_[s][static_cast<std::size_t>(k)] + 512);
          h *= 1099511628211ull;
        }
        auto it = last.find(h);
        while (it != last.end()) {
          int k2 = it->second;
          bool same = true;
          for (std::size_t s = 0; s < t; ++s)
            if (img_[s][static_cast<std::size_t>(k)] != img_[s][static_cast<std::size_t>(k2)]) {
              same = false;
              break;
            }
          if (same) {
            prev_same[static_cast<std::size_t>(k)] = k2;
            break;
          }
          // hash collision with a different column: fall back to no rule here
          break;
        }
        last[h] = k;
      }
    }
    // suffix |entries| sums per assigned slot, for constraint pruning
    std::vector<std::vector<long long>> abs_tail(t, std::vector<long long>(static_cast<std::size_t>(hi_) + 1, 0));
    for (std::size_t s = 0; s < t; ++s)
      for (int k = hi_ - 1; k >= 0; --k)
        abs_tail[s][static_cast<std::size_t>(k)] =
            abs_tail[s][static_cast<std::size_t>(k) + 1] +
            std::abs(img_[s][static_cast<std::size_t>(k)]);

    std::vector<int> cand(static_cast<std::size_t>(n_), 0);
    std::vector<long long> pd(t, 0);

    prefix_dfs(t, 0, norm, bound, cand, pd, prev_same, abs_tail);
  }

  void prefix_dfs(std::size_t t, int k, long long rem, int bound, std::vector<int>& cand,
                  std::vector<long long>& pd, const std::vector<int>& prev_same,
                  const std::vector<std::vector<long long>>& abs_tail) {
    if (found_ || exceeded_) return;
    ++nodes_;
    if (budget_hit()) return;
    if (k == hi_) {
      finish_with_tail(t, rem, cand, pd);
      return;
    }
    for (std::size_t s = 0; s < t; ++s) {
      // fresh coordinates cannot move these dots, only prefix entries can
      long long slack = abs_tail[s][static_cast<std::size_t>(k)] * bound;
      if (std::llabs(req_[t][s] - pd[s]) > slack) return;
    }
    int cap = static_cast<int>(isqrt64(rem));
    if (cap > bound) cap = bound;
    for (int c = cap; c >= -cap; --c) {
      if (reduce_ && prev_same[static_cast<std::size_t>(k)] >= 0 &&
          c > cand[static_cast<std::size_t>(prev_same[static_cast<std::size_t>(k)])])
        continue;
      cand[static_cast<std::size_t>(k)] = c;
      for (std::size_t s = 0; s < t; ++s)
        pd[s] += static_cast<long long>(c) * img_[s][static_cast<std::size_t>(k)];
      prefix_dfs(t, k + 1, rem - static_cast<long long>(c) * c, bound, cand, pd, prev_same, abs_tail);
      for (std::size_t s = 0; s < t; ++s)
        pd[s] -= static_cast<long long>(c) * img_[s][static_cast<std::size_t>(k)];
      if (found_ || exceeded_) {
        cand[static_cast<std::size_t>(k)] = 0;
        return;
      }
    }
    cand[static_cast<std::size_t>(k)] = 0;
  }

  void finish_with_tail(std::size_t t, long long rem, std::vector<int>& cand,
                        std::vector<long long>& pd) {
    for (std::size_t s = 0; s < t; ++s)
      if (pd[s] != req_[t][s]) return;
    // decompose rem into a canonical non-increasing tail of positive entries
    std::vector<int> tail;
    tail_dfs(t, rem, static_cast<int>(isqrt64(rem)), cand, tail);
  }

  void tail_dfs(std::size_t t, long long rem, int max_part, std::vector<int>& cand, std::vector<int>& tail) {
    if (found_ || exceeded_) return;
    if (rem == 0) {
      accept(t, cand, tail);
      return;
    }
    if (hi_ + static_cast<int>(tail.size()) >= n_) return;
    int cap = static_cast<int>(isqrt64(rem));
    if (cap > max_part) cap = max_part;
    for (int part = cap; part >= 1; --part) {
      tail.push_back(part);
      tail_dfs(t, rem - static_cast<long long>(part) * part, part, cand, tail);
      tail.pop_back();
      if (found_ || exceeded_) return;
    }
  }

  void accept(std::size_t t, std::vector<int>& cand, const std::vector<int>& tail) {
    ++nodes_;
    if (budget_hit()) return;
    int old_hi = hi_;
    auto& dst = img_[t];
    for (int k = 0; k < hi_; ++k) dst[static_cast<std::size_t>(k)] = cand[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < tail.size(); ++j) dst[static_cast<std::size_t>(hi_) + j] = tail[j];
    if (reduce_) hi_ = old_hi + static_cast<int>(tail.size());
    bool viable = true;
    if (slots_[t].is_u && !duals_solvable(t + 1)) viable = false;
    if (viable) extend(t + 1);
    if (reduce_) hi_ = old_hi;
    for (int k = 0; k < n_; ++k) dst[static_cast<std::size_t>(k)] = 0;
  }

  const IntegralLattice& lattice_;
  int m_ = 0;
  std::uint64_t budget_ = kDefaultNodeBudget;
  bool reduce_ = true;
  int r_ = 0;
  int n_ = 0;
  std::vector<Slot> slots_;
  std::vector<std::vector<long long>> req_;
  std::vector<std::vector<int>> img_;
  int hi_ = 0;
  bool found_ = false;
  bool exceeded_ = false;
  std::uint64_t nodes_ = 0;
  EmbeddingWitness witness_;
};

}  // namespace detail

// The diagonalization obstruction: search for (a) an isometric embedding of a
// negative definite lattice G into (Z^(rank+2m), -Id), (b) m extra pairwise
// orthogonal square -2 classes orthogonal to the image, and (c) integer duals
// w_j with <u_i, w_j> = delta_ij and <im G, w_j> = 0. Obstructed means no
// such data exist; Inconclusive carries a fully verified witness and
// certifies nothing about sliceness.
inline ObstructionOutcome donaldson_obstruction(const IntegralLattice& g, int m,
                                                std::uint64_t node_budget = kDefaultNodeBudget) {
  if (m < 0) throw std::invalid_argument("donaldson_obstruction: m must be nonnegative");
  if (definiteness(g) != Definiteness::NegativeDefinite && g.rank() > 0)
    throw std::invalid_argument("donaldson_obstruction: lattice must be negative definite");
  detail::EmbeddingSearch search(g, m, node_budget, /*reduce=*/true);
  ObstructionOutcome out = search.run();
  if (out.verdict == ObstructionVerdict::Inconclusive &&
      !verify_witness(g, m, *out.witness))
    throw std::logic_error("donaldson_obstruction: witness failed independent verification");
  return out;
}

// Same search with the symmetry reduction disabled and entries enumerated
// over the full box; the oracle the reduced search is validated against.
inline ObstructionOutcome donaldson_obstruction_brute(const IntegralLattice& g, int m,
                                                      std::uint64_t node_budget = kDefaultNodeBudget) {
  if (m < 0) throw std::invalid_argument("donaldson_obstruction_brute: m must be nonnegative");
  if (definiteness(g) != Definiteness::NegativeDefinite && g.rank() > 0)
    throw std::invalid_argument("donaldson_obstruction_brute: lattice must be negative definite");
  detail::EmbeddingSearch search(g, m, node_budget, /*reduce=*/false);
  ObstructionOutcome out = search.run();
  if (out.verdict == ObstructionVerdict::Inconclusive &&
      !verify_witness(g, m, *out.witness))
    throw std::logic_error("donaldson_obstruction_brute: witness failed independent verification");
  return out;
}

struct FrontierResult {
  std::optional<int> frontier;  // largest m with verdict Obstructed; none if m = 0 already embeds
  bool budget_exceeded = false;
  std::vector<ObstructionOutcome> per_m;
};

// Sweep m upward. Obstructed verdicts are monotone (a witness at m extends to
// m+1 on two fresh coordinates), so the first Inconclusive ends the sweep and
// the frontier is the last Obstructed value. The implied bound is
// frontier + 1 projective summands.
inline FrontierResult min_obstructed_m(const IntegralLattice& g, int m_max,
                                       std::uint64_t node_budget = kDefaultNodeBudget) {
  FrontierResult res;
  for (int m = 0; m <= m_max; ++m) {
    ObstructionOutcome out = donaldson_obstruction(g, m, node_budget);
    ObstructionVerdict v = out.verdict;
    res.per_m.push_back(std::move(out));
    if (v == ObstructionVerdict::Obstructed) {
      res.frontier = m;
      continue;
    }
    if (v == ObstructionVerdict::BudgetExceeded) res.budget_exceeded = true;
    break;
  }
  return res;
}

// Every v in Z^dim with <v,v> = -norm (so sum of squares = norm) meeting all
// the (vector, required pairing) constraints, exactly once, lexicographically.
inline std::vector<std::vector<long long>> enumerate_vectors(
    long long norm, int dim,
    const std::vector<std::pair<std::vector<long long>, long long>>& constraints = {}) {
  if (norm < 1) throw std::invalid_argument("enumerate_vectors: need norm >= 1");
  if (dim < 0) throw std::invalid_argument("enumerate_vectors: need dim >= 0");
  for (const auto& c : constraints)
    if (static_cast<int>(c.first.size()) != dim)
      throw std::invalid_argument("enumerate_vectors: constraint dimension mismatch");
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(static_cast<std::size_t>(dim), 0);
  long long bound = isqrt64(norm);
  struct Rec {
    long long norm;
    int dim;
    long long bound;
    const std::vector<std::pair<std::vector<long long>, long long>>& cs;
    std::vector<std::vector<long long>>& out;
    std::vector<long long>& v;
    void go(int k, long long rem) {
      if (k == dim) {
        if (rem != 0) return;
        for (const auto& c : cs) {
          long long dot = 0;
          for (int i = 0; i < dim; ++i) dot += c.first[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
          if (-dot != c.second) return;  // pairing is -dot
        }
        out.push_back(v);
        return;
      }
      long long cap = isqrt64(rem);
      if (cap > bound) cap = bound;
      for (long long c = -cap; c <= cap; ++c) {  // ascending: lexicographic output
        v[static_cast<std::size_t>(k)] = c;
        go(k + 1, rem - c * c);
      }
      v[static_cast<std::size_t>(k)] = 0;
    }
  } rec{norm, dim, bound, constraints, out, v};
  rec.go(0, norm);
  return out;
}

}  // namespace cpslice
