#pragma once

#include <string>
#include <vector>

#include "cpslice/integers.hpp"

namespace cpslice {

// Laurent polynomial with exact integer coefficients. coeffs[k] is the
// coefficient of t^(min_degree + k); leading and trailing coefficients are
// nonzero, and the zero polynomial is the empty coefficient list.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  LaurentPolynomial(std::vector<Int> coeffs, long long min_degree)
      : coeffs_(std::move(coeffs)), min_degree_(min_degree) {
    trim();
  }

  static LaurentPolynomial zero() { return LaurentPolynomial(); }
  static LaurentPolynomial constant(Int c) { return LaurentPolynomial({std::move(c)}, 0); }
  // c * t^k
  static LaurentPolynomial monomial(Int c, long long k) { return LaurentPolynomial({std::move(c)}, k); }

  bool is_zero() const { return coeffs_.empty(); }
  long long min_degree() const { return min_degree_; }
  long long max_degree() const { return min_degree_ + static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(long long deg) const {
    if (is_zero() || deg < min_degree() || deg > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(deg - min_degree_)];
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long lo = std::min(a.min_degree(), b.min_degree());
    long long hi = std::max(a.max_degree(), b.max_degree());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (long long d = lo; d <= hi; ++d) c[static_cast<std::size_t>(d - lo)] = a.coeff(d) + b.coeff(d);
    return LaurentPolynomial(std::move(c), lo);
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }

  LaurentPolynomial operator-() const {
    std::vector<Int> c = coeffs_;
    for (auto& x : c) x = -x;
    return LaurentPolynomial(std::move(c), min_degree_);
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPolynomial(std::move(c), a.min_degree_ + b.min_degree_);
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
  }

  // Exact division, for use inside fraction-free elimination where the
  // quotient is known to be a polynomial. Throws if the division leaves a
  // remainder.
  friend LaurentPolynomial div_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    if (a.is_zero()) return zero();
    std::vector<Int> rem = a.coeffs_;
    const std::vector<Int>& d = b.coeffs_;
    if (rem.size() < d.size()) throw std::logic_error("div_exact: inexact division");
    std::vector<Int> q(rem.size() - d.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Int top = rem[k + d.size() - 1];
      if (top == 0) continue;
      if (top % d.back() != 0) throw std::logic_error("div_exact: inexact division");
      q[k] = top / d.back();
      for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q[k] * d[j];
    }
    for (const Int& r : rem)
      if (r != 0) throw std::logic_error("div_exact: inexact division");
    return LaurentPolynomial(std::move(q), a.min_degree_ - b.min_degree_);
  }

  Int evaluate(const Int& t) const {
    // only meaningful for min_degree >= 0 unless t = +-1
    Int acc = 0;
    if (min_degree_ < 0 && t != 1 && t != -1)
      throw std::invalid_argument("evaluate: negative degrees need t = +-1");
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    if (min_degree_ != 0 && !is_zero()) {
      Int tw = 1;
      long long e = min_degree_;
      Int base = t;
      if (e < 0) { e = -e; }  // t = +-1 here, so t^-1 == t
      for (long long i = 0; i < e; ++i) tw *= base;
      acc *= tw;
    }
    return acc;
  }

  // f(t) -> f(1/t)
  LaurentPolynomial reciprocal() const {
    if (is_zero()) return zero();
    std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPolynomial(std::move(c), -max_degree());
  }

  bool is_unit_monomial() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }

  // Shift to min_degree 0 and make the lowest coefficient positive.
  LaurentPolynomial normalized() const {
    if (is_zero()) return zero();
    std::vector<Int> c = coeffs_;
    if (c.front() < 0)
      for (auto& x : c) x = -x;
    return LaurentPolynomial(std::move(c), 0);
  }

  // Equality up to multiplication by +-t^k.
  friend bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.normalized() == b.normalized();
  }

  bool is_symmetric_poly() const { return equal_up_to_units(*this, reciprocal()); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Int& c = coeffs_[k];
      if (c == 0) continue;
      long long d = min_degree_ + static_cast<long long>(k);
      if (!s.empty()) s += (c > 0 ? " + " : " - ");
      else if (c < 0) s += "-";
      Int ab = c < 0 ? Int(-c) : c;
      bool unit = (ab == 1);
      if (!unit || d == 0) s += ab.str();
      if (d != 0) {
        if (!unit) s += "*";
        s += "t";
        if (d != 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_degree_ = 0;
      return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > 0 && coeffs_[tail - 1] == 0) --tail;
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(lead), coeffs_.begin() + static_cast<long>(tail));
    min_degree_ += static_cast<long long>(lead);
  }

  std::vector<Int> coeffs_;
  long long min_degree_ = 0;
};

// det(M) for a small matrix of Laurent polynomials, by cofactor expansion.
// Ranks here stay <= ~12 (Seifert matrices of the supported families).
inline LaurentPolynomial poly_det(const std::vector<std::vector<LaurentPolynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial::constant(1);
  if (n == 1) return m[0][0];
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  // recursive expansion along the first row with explicit column list
  struct Rec {
    const std::vector<std::vector<LaurentPolynomial>>& a;
    LaurentPolynomial run(std::size_t row, std::vector<std::size_t>& cs) {
      if (cs.size() == 1) return a[row][cs[0]];
      LaurentPolynomial acc;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const LaurentPolynomial& pivot = a[row][cs[k]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cs.size() - 1);
        for (std::size_t t = 0; t < cs.size(); ++t)
          if (t != k) rest.push_back(cs[t]);
        LaurentPolynomial sub = run(row + 1, rest);
        LaurentPolynomial term = pivot * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{m};
  return rec.run(0, cols);
}

}  // namespace cpslice
