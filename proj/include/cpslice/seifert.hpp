#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "cpslice/integers.hpp"
#include "cpslice/laurent.hpp"

namespace cpslice {

// Seifert pairing of a genus-g surface basis: a 2g x 2g exact integer matrix A
// with det(A - A^T) = 1. Source of signature, Alexander polynomial, knot
// determinant and the Tristram-Levine samples.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // rank 0: the unknot

  explicit SeifertMatrix(Mat entries) : a_(std::move(entries)) {
    std::size_t n = a_.size();
    if (n % 2 != 0) throw std::invalid_argument("SeifertMatrix: rank must be even");
    for (const auto& row : a_)
      if (row.size() != n) throw std::invalid_argument("SeifertMatrix: matrix must be square");
    Mat skew = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) skew[i][j] = a_[i][j] - a_[j][i];
    if (det_exact(skew) != 1)
      throw std::invalid_argument("SeifertMatrix: A - A^T must be unimodular (symplectic)");
  }

  std::size_t rank() const { return a_.size(); }
  std::size_t genus() const { return a_.size() / 2; }
  const Mat& entries() const { return a_; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  Mat symmetrized() const {
    Mat s = zero_matrix(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s[i][j] = a_[i][j] + a_[j][i];
    return s;
  }

 private:
  Mat a_;
};

// --- family constructors ------------------------------------------------

// Twist knot K_a (a >= 1 full twist parameter): genus one, [[1,1],[0,-a]].
// K_1 is the figure eight, K_2 the stevedore.
inline SeifertMatrix twist_seifert(long long a) {
  if (a < 1) throw std::invalid_argument("twist_seifert: need a >= 1");
  return SeifertMatrix(Mat{{Int(1), Int(1)}, {Int(0), Int(-a)}});
}

// Odd 3-strand pretzel P(a,b,c): genus one in the standard surface basis.
// The entry layout is pinned by requiring that (a,b,c) = (p, -p-2k, 3p+8k-2)
// reproduces [[p+3k-1, (-p-1)/2-k], [(-p+1)/2-k, -k]] exactly.
inline SeifertMatrix pretzel3_seifert(long long a, long long b, long long c) {
  if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
    throw std::invalid_argument("pretzel3_seifert: parameters must be odd");
  Mat m = {{Int((b + c) / 2), Int((b - 1) / 2)}, {Int((b + 1) / 2), Int((a + b) / 2)}};
  return SeifertMatrix(std::move(m));
}

// Right-handed torus knot T(2, 2m+1): 2m x 2m band matrix, sigma = -2m.
inline SeifertMatrix torus2_seifert(long long m) {
  if (m < 1) throw std::invalid_argument("torus2_seifert: need m >= 1");
  std::size_t n = static_cast<std::size_t>(2 * m);
  Mat a = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = -1;
    if (i + 1 < n) a[i][i + 1] = 1;
  }
  return SeifertMatrix(std::move(a));
}

inline SeifertMatrix connected_sum(const SeifertMatrix& x, const SeifertMatrix& y) {
  std::size_t n = x.rank(), m = y.rank();
  Mat a = zero_matrix(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = x.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[n + i][n + j] = y.at(i, j);
  return SeifertMatrix(std::move(a));
}

// Mirror image: A -> -A^T. Negates the signature, preserves Alexander.
inline SeifertMatrix mirror(const SeifertMatrix& x) {
  std::size_t n = x.rank();
  Mat a = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -x.at(j, i);
  return SeifertMatrix(std::move(a));
}

// --- classical invariants -------------------------------------------------

inline int signature(const SeifertMatrix& a) { return symmetric_signature(a.symmetrized()); }

// det(tA - A^T), normalized to min degree 0 with positive lowest coefficient.
inline LaurentPolynomial alexander(const SeifertMatrix& a) {
  std::size_t n = a.rank();
  if (n == 0) return LaurentPolynomial::constant(1);
  std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // t*A_ij - A_ji
      std::vector<Int> c = {-a.at(j, i), a.at(i, j)};
      m[i][j] = LaurentPolynomial(std::move(c), 0);
    }
  return poly_det(m).normalized();
}

inline Int knot_determinant(const SeifertMatrix& a) {
  Int d = det_exact(a.symmetrized());  // = Delta(-1) up to sign
  return d < 0 ? Int(-d) : d;
}

// --- Tristram-Levine signatures --------------------------------------------

namespace detail {

// Eigenvalue sign count of a complex Hermitian matrix via its real symmetric
// doubling [[Re, -Im], [Im, Re]] and Jacobi iteration. Sizes here are tiny.
inline std::optional<int> hermitian_signature(const std::vector<std::vector<std::complex<double>>>& h,
                                              double det_guard) {
  std::size_t n = h.size();
  if (n == 0) return 0;
  // determinant guard (LU with partial pivoting)
  {
    std::vector<std::vector<std::complex<double>>> lu = h;
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu[i][k]) > std::abs(lu[p][k])) p = i;
      if (p != k) {
        std::swap(lu[p], lu[k]);
        det = -det;
      }
      if (std::abs(lu[k][k]) < 1e-14) {
        det = 0.0;
        break;
      }
      det *= lu[k][k];
      for (std::size_t i = k + 1; i < n; ++i) {
        std::complex<double> f = lu[i][k] / lu[k][k];
        for (std::size_t j = k; j < n; ++j) lu[i][j] -= f * lu[k][j];
      }
    }
    if (std::abs(det) < det_guard) return std::nullopt;
  }
  std::size_t N2 = 2 * n;
  std::vector<std::vector<double>> s(N2, std::vector<double>(N2, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s[i][j] = h[i][j].real();
      s[i][n + j] = -h[i][j].imag();
      s[n + i][j] = h[i][j].imag();
      s[n + i][n + j] = h[i][j].real();
    }
  // cyclic Jacobi sweeps
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N2; ++p)
      for (std::size_t q = p + 1; q < N2; ++q) off += s[p][q] * s[p][q];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < N2; ++p)
      for (std::size_t q = p + 1; q < N2; ++q) {
        if (std::abs(s[p][q]) < 1e-300) continue;
        double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
        for (std::size_t k = 0; k < N2; ++k) {
          double akp = s[k][p], akq = s[k][q];
          s[k][p] = c * akp - sn * akq;
          s[k][q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < N2; ++k) {
          double apk = s[p][k], aqk = s[q][k];
          s[p][k] = c * apk - sn * aqk;
          s[q][k] = sn * apk + c * aqk;
        }
      }
  }
  int pos = 0, neg = 0;
  for (std::size_t i = 0; i < N2; ++i) {
    if (s[i][i] > 0) ++pos;
    else if (s[i][i] < 0) ++neg;
  }
  if ((pos - neg) % 2 != 0) return std::nullopt;  // doubled spectrum must pair up
  return (pos - neg) / 2;
}

}  // namespace detail

// Signature of (1-w)A + (1-conj(w))A^T at a unit-modulus sample w. Exact at
// w = -1 (where it equals sig(A + A^T)); elsewhere floating point with a
// guard on |det|: nullopt means NearSingular (a zero of the Alexander
// polynomial is too close).
inline std::optional<int> tristram_levine(const SeifertMatrix& a, std::complex<double> w,
                                          double det_guard = 1e-9) {
  if (std::abs(std::abs(w) - 1.0) > 1e-9)
    throw std::invalid_argument("tristram_levine: sample must be on the unit circle");
  if (std::abs(w - std::complex<double>(-1.0, 0.0)) < 1e-12) return signature(a);
  std::size_t n = a.rank();
  std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
  std::complex<double> u = std::complex<double>(1.0, 0.0) - w;
  std::complex<double> ubar = std::conj(u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double aij = static_cast<double>(a.at(i, j));
      double aji = static_cast<double>(a.at(j, i));
      h[i][j] = u * aij + ubar * aji;
    }
  return detail::hermitian_signature(h, det_guard);
}

// --- Bryant's pretzel signature ---------------------------------------------

// sigma(P(q_1..q_n)) = (#positive) - (#negative) - sgn(sum 1/q_i), for odd
// nonzero parameters; sgn(0) = 0. An odd number of strands is required so the
// parameters define a knot.
inline int bryant_signature(const std::vector<long long>& params) {
  if (params.size() % 2 == 0)
    throw std::invalid_argument("bryant_signature: even strand count defines a link, not a knot");
  int pos = 0, neg = 0;
  Rat sum = 0;
  for (long long q : params) {
    if (q == 0 || q % 2 == 0)
      throw std::invalid_argument("bryant_signature: parameters must be odd and nonzero");
    if (q > 0) ++pos;
    else ++neg;
    sum += reciprocal_of(q);
  }
  return pos - neg - sign_of(sum);
}

// Alexander polynomial of P(p,q,r) with p,q,r odd:
//   ((pq+qr+pr)(t - 2 + 1/t) + (t + 2 + 1/t)) / 4,
// returned in symmetric Laurent form. The numerator is divisible by 4 exactly
// because the parameters are odd; a failure there is a bug, not bad input.
inline LaurentPolynomial pretzel3_alexander(long long p, long long q, long long r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0)
    throw std::invalid_argument("pretzel3_alexander: parameters must be odd");
  Int s = Int(p) * q + Int(q) * r + Int(p) * r;
  Int lead = s + 1, mid = 2 - 2 * s;
  if (lead % 4 != 0 || mid % 4 != 0)
    throw std::logic_error("pretzel3_alexander: numerator not divisible by 4");
  return LaurentPolynomial({lead / 4, mid / 4, lead / 4}, -1);
}

// --- signature gate -----------------------------------------------------

struct SignatureSample {
  int theta_num = 0;   // angle = pi * theta_num / theta_den, in (0, pi]
  int theta_den = 1;
  std::optional<int> sigma;  // nullopt: NearSingular, skipped
};

// Consequences of the Murasugi-Tristram style bound -2m <= sigma_K(w) <= 0 for
// knots H-slice in m positive projective planes (and its mirror for the
// reversed orientation).
struct SignatureGateResult {
  int sigma_at_minus_one = 0;
  bool cp2_infinite = false;     // some regular sample has sigma > 0
  bool cp2bar_infinite = false;  // some regular sample has sigma < 0
  long long lower_cp2_top = 0;   // ceil(max(-sigma)/2) over regular samples
  long long lower_cp2bar_top = 0;
  int skipped = 0;
  std::vector<SignatureSample> samples;
};

inline SignatureGateResult signature_gate(const SeifertMatrix& a, int sample_count = 64) {
  if (sample_count < 1) throw std::invalid_argument("signature_gate: need samples >= 1");
  SignatureGateResult res;
  res.sigma_at_minus_one = signature(a);
  int den = sample_count + 1;
  std::vector<SignatureSample> samples;
  for (int j = 1; j <= sample_count; ++j) {
    // strictly inside the open upper semicircle; conjugates carry no new data
    double theta = M_PI * static_cast<double>(j) / static_cast<double>(den);
    std::complex<double> w(std::cos(theta), std::sin(theta));
    SignatureSample s;
    s.theta_num = j;
    s.theta_den = den;
    s.sigma = tristram_levine(a, w);
    if (!s.sigma) ++res.skipped;
    samples.push_back(s);
  }
  SignatureSample minus_one;
  minus_one.theta_num = 1;
  minus_one.theta_den = 1;
  minus_one.sigma = res.sigma_at_minus_one;  // exact path
  samples.push_back(minus_one);
  int max_sigma = 0, min_sigma = 0;
  for (const auto& s : samples) {
    if (!s.sigma) continue;
    max_sigma = std::max(max_sigma, *s.sigma);
    min_sigma = std::min(min_sigma, *s.sigma);
  }
  res.cp2_infinite = max_sigma > 0;
  res.cp2bar_infinite = min_sigma < 0;
  res.lower_cp2_top = std::max(0, (-min_sigma + 1) / 2);
  res.lower_cp2bar_top = std::max(0, (max_sigma + 1) / 2);
  res.samples = std::move(samples);
  return res;
}

}  // namespace cpslice
