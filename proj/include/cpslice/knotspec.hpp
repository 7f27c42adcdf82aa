#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpslice/integers.hpp"
#include "cpslice/lattice.hpp"
#include "cpslice/plumbing.hpp"
#include "cpslice/seifert.hpp"

namespace cpslice {

// --- expressions ------------------------------------------------------------

enum class AtomKind { Twist, Pretzel, Torus2 };

struct KnotAtom {
  AtomKind kind = AtomKind::Twist;
  bool mirrored = false;            // twist and torus atoms; pretzels mirror by negating
  long long a = 1;                  // twist parameter, or m for T(2, 2m+1)
  std::vector<long long> params;    // pretzel parameters

  KnotAtom atom_mirror() const {
    KnotAtom out = *this;
    if (kind == AtomKind::Pretzel) {
      for (auto& p : out.params) p = -p;
    } else {
      out.mirrored = !out.mirrored;
    }
    return out;
  }
};

// A knot expression normalized to a connected sum of atoms; the empty sum is
// the unknot. Mirrors are pushed onto atoms (pretzels by negating their
// parameters), which also collapses double mirrors.
class KnotExpression {
 public:
  KnotExpression() = default;
  explicit KnotExpression(std::vector<KnotAtom> summands) : summands_(std::move(summands)) {}

  static KnotExpression unknot() { return KnotExpression(); }

  static KnotExpression twist(long long a, bool mirrored = false) {
    if (a < 1) throw std::invalid_argument("twist knot: need a >= 1");
    KnotAtom atom;
    atom.kind = AtomKind::Twist;
    atom.a = a;
    atom.mirrored = mirrored;
    return KnotExpression({atom});
  }

  static KnotExpression pretzel(std::vector<long long> params) {
    if (params.size() < 3 || params.size() % 2 == 0)
      throw std::invalid_argument("pretzel: need an odd number (>= 3) of strands for a knot");
    for (long long p : params)
      if (p == 0 || p % 2 == 0) throw std::invalid_argument("pretzel: parameters must be odd and nonzero");
    KnotAtom atom;
    atom.kind = AtomKind::Pretzel;
    atom.params = std::move(params);
    return KnotExpression({atom});
  }

  static KnotExpression torus2(long long n_strands, bool mirrored = false) {
    // T(2, n) for odd n >= 3; stored via m with n = 2m + 1
    if (n_strands < 3 || n_strands % 2 == 0)
      throw std::invalid_argument("torus knot T(2,n): need odd n >= 3");
    KnotAtom atom;
    atom.kind = AtomKind::Torus2;
    atom.a = (n_strands - 1) / 2;
    atom.mirrored = mirrored;
    return KnotExpression({atom});
  }

  KnotExpression mirror_expr() const {
    std::vector<KnotAtom> out;
    out.reserve(summands_.size());
    for (const auto& s : summands_) out.push_back(s.atom_mirror());
    return KnotExpression(std::move(out));
  }

  friend KnotExpression connected_sum(const KnotExpression& x, const KnotExpression& y) {
    std::vector<KnotAtom> out = x.summands_;
    out.insert(out.end(), y.summands_.begin(), y.summands_.end());
    return KnotExpression(std::move(out));
  }

  const std::vector<KnotAtom>& summands() const { return summands_; }
  bool is_unknot() const { return summands_.empty(); }

  std::string render() const {
    if (summands_.empty()) return "U";
    std::string out;
    for (const auto& s : summands_) {
      if (!out.empty()) out += "#";
      if (s.mirrored) out += "-";
      switch (s.kind) {
        case AtomKind::Twist:
          out += "K(" + std::to_string(s.a) + ")";
          break;
        case AtomKind::Torus2:
          out += "T(2," + std::to_string(2 * s.a + 1) + ")";
          break;
        case AtomKind::Pretzel: {
          out += "P(";
          for (std::size_t i = 0; i < s.params.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s.params[i]);
          }
          out += ")";
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<KnotAtom> summands_;
};

// --- parser -----------------------------------------------------------------

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpression parse() {
    KnotExpression expr = term();
    skip_ws();
    while (!eof() && peek() == '#') {
      ++pos_;
      expr = connected_sum(expr, term());
      skip_ws();
    }
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return expr;
  }

 private:
  KnotExpression term() {
    skip_ws();
    bool mirrored = false;
    if (!eof() && peek() == '-') {
      mirrored = true;
      ++pos_;
      skip_ws();
    }
    KnotExpression atom = parse_atom();
    return mirrored ? atom.mirror_expr() : atom;
  }

  KnotExpression parse_atom() {
    skip_ws();
    if (eof()) fail("expected a knot atom");
    char c = peek();
    std::size_t at = pos_;
    try {
      if (c == 'U') {
        ++pos_;
        return KnotExpression::unknot();
      }
      if (c == 'K') {
        ++pos_;
        expect('(');
        long long a = integer();
        expect(')');
        return KnotExpression::twist(a);
      }
      if (c == 'T') {
        ++pos_;
        expect('(');
        long long two = integer();
        if (two != 2) fail("torus atoms are T(2,n)");
        expect(',');
        long long n = integer();
        expect(')');
        return KnotExpression::torus2(n);
      }
      if (c == 'P') {
        ++pos_;
        expect('(');
        std::vector<long long> params;
        params.push_back(integer());
        skip_ws();
        while (!eof() && peek() == ',') {
          ++pos_;
          params.push_back(integer());
          skip_ws();
        }
        expect(')');
        return KnotExpression::pretzel(std::move(params));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, e.what());
    }
    fail("expected one of K(..), P(..), T(2,..), U");
    return KnotExpression::unknot();  // unreachable
  }

  long long integer() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) throw ParseError(at, "integer out of range");
      ++pos_;
    }
    return neg ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline KnotExpression parse_knot(std::string_view text) { return detail::Parser(text).parse(); }

// --- derived data -----------------------------------------------------------

// Seifert matrix by structural recursion. Pretzels with more than three
// strands have no constructor wired, so the result is optional; their
// signature still comes from the pretzel signature formula.
inline std::optional<SeifertMatrix> seifert_of(const KnotExpression& k) {
  SeifertMatrix acc;
  for (const auto& s : k.summands()) {
    SeifertMatrix part;
    switch (s.kind) {
      case AtomKind::Twist:
        part = twist_seifert(s.a);
        break;
      case AtomKind::Torus2:
        part = torus2_seifert(s.a);
        break;
      case AtomKind::Pretzel:
        if (s.params.size() != 3) return std::nullopt;
        part = pretzel3_seifert(s.params[0], s.params[1], s.params[2]);
        break;
    }
    if (s.mirrored) part = mirror(part);
    acc = connected_sum(acc, part);
  }
  return acc;
}

inline int signature_of(const KnotExpression& k) {
  if (auto a = seifert_of(k)) return signature(*a);
  int sig = 0;
  for (const auto& s : k.summands()) {
    int part = 0;
    switch (s.kind) {
      case AtomKind::Twist: part = 0; break;
      case AtomKind::Torus2: part = -2 * static_cast<int>(s.a); break;
      case AtomKind::Pretzel: part = bryant_signature(s.params); break;
    }
    sig += s.mirrored ? -part : part;
  }
  return sig;
}

struct FillingResult {
  std::optional<IntegralLattice> lattice;
  std::string unsupported_reason;  // names the offending atom when empty above
};

// Negative definite filling of the double branched cover, assembled from lens
// space chains for twist atoms (and their mirrors) and star plumbings for
// admissible pretzels. Torus atoms have no filling wired here; the signature
// gates already settle them.
inline FillingResult neg_filling_of(const KnotExpression& k) {
  IntegralLattice acc;
  int part_no = 0;
  for (const auto& s : k.summands()) {
    ++part_no;
    IntegralLattice part;
    switch (s.kind) {
      case AtomKind::Twist: {
        long long p = 4 * s.a + 1;
        long long q = s.mirrored ? 4 * s.a - 1 : 2;  // -L(p,2) = L(p, p-2)
        part = lens_fillings(p, q).neg_def;
        break;
      }
      case AtomKind::Torus2:
        return {std::nullopt, "torus atom " + std::string(s.mirrored ? "-" : "") + "T(2," +
                                  std::to_string(2 * s.a + 1) + ") has no definite filling wired"};
      case AtomKind::Pretzel: {
        std::vector<long long> pos, neg;
        for (long long p : s.params) (p > 0 ? pos : neg).push_back(p);
        bool admissible = !neg.empty() && pos.size() == neg.size() + 1;
        for (long long p : pos)
          if (p < 3) admissible = false;
        for (long long q : neg)
          if (q > -3) admissible = false;
        if (admissible) {
          Rat sum = 0;
          for (long long p : s.params) sum += reciprocal_of(p);
          if (!(sum > 0)) admissible = false;
        }
        if (!admissible)
          return {std::nullopt, "pretzel atom P(...) outside the plumbing hypotheses"};
        part = pretzel_plumbing(pos, neg);
        break;
      }
    }
    // qualify labels per summand so reports stay readable
    std::vector<std::string> labels = part.labels();
    if (k.summands().size() > 1)
      for (auto& l : labels) l = std::to_string(part_no) + ":" + l;
    part = IntegralLattice(part.gram(), std::move(labels));
    acc = direct_sum(acc, part);
  }
  if (definiteness(acc) != Definiteness::NegativeDefinite && acc.rank() > 0)
    throw std::logic_error("neg_filling_of: assembled filling is not negative definite");
  return {std::move(acc), ""};
}

// --- crossing-change upper bounds --------------------------------------------

enum class Side { CP2, CP2Bar, CP2Top, CP2BarTop };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::CP2: return "cp2";
    case Side::CP2Bar: return "cp2bar";
    case Side::CP2Top: return "cp2_top";
    case Side::CP2BarTop: return "cp2bar_top";
  }
  return "?";
}

struct UpperRule {
  Side side = Side::CP2;
  std::optional<long long> bound;  // nullopt: finite with no counted bound
  std::string citation;
};

struct UpperRuleSet {
  std::vector<UpperRule> rules;             // itemized, with citations
  std::optional<long long> cp2, cp2bar;     // best counted totals
  bool cp2_finite = false, cp2bar_finite = false;  // finiteness even when uncounted
  std::optional<long long> cp2top, cp2bar_top;     // counted totals for the flat sides
};

namespace detail {

struct AtomCosts {
  std::optional<long long> cp2, cp2bar;          // counted costs
  bool cp2_finite = false, cp2bar_finite = false;
  std::optional<long long> cp2top, cp2bar_top;   // extra flat-side rules (on top of smooth)
};

inline std::optional<long long> twist_cp2_cost(long long a) {
  if (a == 2) return 0;  // stevedore, slice
  if (a == 1) return 1;  // figure eight: amphichiral, one change either way
  return a - 2;          // descend to the slice twist knot
}

inline std::optional<long long> twist_cp2bar_cost(long long a) {
  if (a == 2) return 0;
  return 1;  // one negative-to-positive change reaches the unknot
}

// Cor 5.4(3)(a)-shaped counted bound for a 3-strand pretzel, and the
// uniform-strand generalization; nullopt when no counted rule applies.
struct PretzelCp2Rule {
  std::optional<long long> counted;
  bool finite = false;
  std::string note;
};

inline PretzelCp2Rule pretzel_cp2_rule(const std::vector<long long>& params) {
  std::vector<long long> pos, neg;
  for (long long p : params) (p > 0 ? pos : neg).push_back(p);
  PretzelCp2Rule out;
  if (params.size() == 3) {
    if (neg.size() == 1 && pos.size() == 2) {
      long long n = -neg[0];
      std::optional<long long> best;
      for (long long y : pos)
        if (n >= y) {
          long long k = (n - y) / 2;
          if (!best || k < *best) best = k;
        }
      if (best) {
        out.counted = best;
        out.finite = true;
        out.note = std::to_string(*best) + " positive-to-negative changes reach a ribbon pretzel";
        return out;
      }
    }
    if (neg.size() >= 2) {
      out.finite = true;  // grow one negative strand to cancel another; uncounted
      out.note = "two negative strands: finite by growing one to cancel the other";
      return out;
    }
    return out;
  }
  // uniform odd family P(p, q, p, q, ..., p) with |q| >= p: k blocks to undo
  bool uniform = pos.size() == neg.size() + 1 && !pos.empty() && !neg.empty();
  for (long long p : pos)
    if (p != pos[0]) uniform = false;
  for (long long q : neg)
    if (q != neg[0]) uniform = false;
  if (uniform && -neg[0] >= pos[0]) {
    long long k = static_cast<long long>(neg.size());
    out.counted = k * ((-neg[0] - pos[0]) / 2);
    out.finite = true;
    out.note = "uniform strands: undo each negative block down to the ribbon pretzel";
  }
  return out;
}

// Does the parameter multiset match {p, -p-2k, 3p+8k-2} for odd p >= 3, k >= 1?
inline bool pretzel_top_one_pattern(const std::vector<long long>& params) {
  if (params.size() != 3) return false;
  std::vector<long long> pos, neg;
  for (long long p : params) (p > 0 ? pos : neg).push_back(p);
  if (neg.size() != 1 || pos.size() != 2) return false;
  long long n = -neg[0];
  for (int swap = 0; swap < 2; ++swap) {
    long long p = pos[swap], r = pos[1 - swap];
    if (p >= 3 && n > p && (n - p) % 2 == 0) {
      long long k = (n - p) / 2;
      if (k >= 1 && r == 3 * p + 8 * k - 2) return true;
    }
  }
  return false;
}

}  // namespace detail

// All applicable crossing-change rules, summed per side over the connected
// summands, with twist pairs matched optimally (a positive twist summand and
// a mirrored one can cancel into a slice pair more cheaply than separately).
inline UpperRuleSet upper_rules(const KnotExpression& k) {
  UpperRuleSet out;

  struct TwistEntry {
    long long a;
    std::optional<long long> solo;  // counted solo cost on the side in play
  };

  // costs per atom, both sides
  std::vector<detail::AtomCosts> costs;
  std::vector<const KnotAtom*> atoms;
  for (const auto& s : k.summands()) {
    detail::AtomCosts c;
    switch (s.kind) {
      case AtomKind::Twist: {
        auto cp2 = detail::twist_cp2_cost(s.a);
        auto bar = detail::twist_cp2bar_cost(s.a);
        c.cp2 = s.mirrored ? bar : cp2;
        c.cp2bar = s.mirrored ? cp2 : bar;
        c.cp2_finite = c.cp2.has_value();
        c.cp2bar_finite = c.cp2bar.has_value();
        break;
      }
      case AtomKind::Torus2: {
        std::optional<long long> m = s.a;  // m positive-to-negative changes unknot it
        if (!s.mirrored) c.cp2 = m;
        else c.cp2bar = m;
        c.cp2_finite = c.cp2.has_value();
        c.cp2bar_finite = c.cp2bar.has_value();
        break;
      }
      case AtomKind::Pretzel: {
        auto plus = detail::pretzel_cp2_rule(s.params);
        std::vector<long long> mirrored = s.params;
        for (auto& p : mirrored) p = -p;
        auto minus = detail::pretzel_cp2_rule(mirrored);
        c.cp2 = plus.counted;
        c.cp2_finite = plus.finite;
        c.cp2bar = minus.counted;
        c.cp2bar_finite = minus.finite;
        if (detail::pretzel_top_one_pattern(s.params)) c.cp2top = 1;
        if (detail::pretzel_top_one_pattern(mirrored)) c.cp2bar_top = 1;
        break;
      }
    }
    costs.push_back(c);
    atoms.push_back(&s);
  }

  // itemized rules, per summand
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const auto& c = costs[i];
    std::string who = (atoms[i]->mirrored ? std::string("-") : std::string("")) +
                      KnotExpression({*atoms[i]}).render();
    if (c.cp2)
      out.rules.push_back({Side::CP2, c.cp2, who + ": positive-to-negative changes to a slice knot"});
    else if (c.cp2_finite)
      out.rules.push_back({Side::CP2, std::nullopt, who + ": positively slice, no counted bound"});
    if (c.cp2bar)
      out.rules.push_back({Side::CP2Bar, c.cp2bar, who + ": negative-to-positive changes to a slice knot"});
    else if (c.cp2bar_finite)
      out.rules.push_back({Side::CP2Bar, std::nullopt, who + ": negatively slice, no counted bound"});
    if (c.cp2top)
      out.rules.push_back({Side::CP2Top, c.cp2top, who + ": one generalized negative crossing reaches a unit Alexander polynomial"});
    if (c.cp2bar_top)
      out.rules.push_back({Side::CP2BarTop, c.cp2bar_top, who + ": mirrored unit-Alexander pattern"});
  }

  // twist pairing: a plain K_a and a mirrored K_b with b >= a cancel with
  // b - a changes (negative-to-positive for the cp2bar side and dually)
  auto total_for_side = [&](bool bar_side) -> std::pair<std::optional<long long>, bool> {
    std::vector<std::size_t> plain, mirrored_list;
    long long base = 0;
    bool finite = true, counted = true;
    for (std::size_t i = 0; i < costs.size(); ++i) {
      const auto& c = costs[i];
      auto side_cost = bar_side ? c.cp2bar : c.cp2;
      bool side_finite = bar_side ? c.cp2bar_finite : c.cp2_finite;
      if (atoms[i]->kind == AtomKind::Twist) {
        (atoms[i]->mirrored ? mirrored_list : plain).push_back(i);
        continue;  // handled by the matching below
      }
      if (side_cost) base += *side_cost;
      else if (side_finite) counted = false;
      else finite = false;
    }
    if (!finite) return {std::nullopt, false};
    // indices of twist atoms: on the bar side, pair plain a with mirrored b >= a;
    // on the cp2 side, pair mirrored a with plain b >= a
    const auto& small = bar_side ? plain : mirrored_list;
    const auto& large = bar_side ? mirrored_list : plain;
    auto solo_cost = [&](std::size_t i) {
      return bar_side ? costs[i].cp2bar : costs[i].cp2;
    };
    long long best = -1;
    std::vector<bool> used(large.size(), false);
    // exhaustive matching; summand counts stay tiny
    struct Match {
      const std::vector<std::size_t>& small;
      const std::vector<std::size_t>& large;
      const std::vector<const KnotAtom*>& atoms;
      std::function<std::optional<long long>(std::size_t)> solo;
      std::vector<bool>& used;
      long long best = -1;
      void go(std::size_t idx, long long acc) {
        if (idx == small.size()) {
          long long total = acc;
          for (std::size_t j = 0; j < large.size(); ++j)
            if (!used[j]) total += solo(large[j]).value_or(0);
          if (best < 0 || total < best) best = total;
          return;
        }
        std::size_t i = small[idx];
        go(idx + 1, acc + solo(i).value_or(0));  // leave unpaired
        for (std::size_t j = 0; j < large.size(); ++j) {
          if (used[j]) continue;
          long long a = atoms[i]->a, b = atoms[large[j]]->a;
          if (b < a) continue;
          used[j] = true;
          go(idx + 1, acc + (b - a));
          used[j] = false;
        }
      }
    } match{small, large, atoms, solo_cost, used};
    match.go(0, 0);
    best = match.best < 0 ? 0 : match.best;
    if (!counted) return {std::nullopt, true};
    return {base + best, true};
  };

  auto [cp2_total, cp2_fin] = total_for_side(false);
  auto [bar_total, bar_fin] = total_for_side(true);
  out.cp2 = cp2_total;
  out.cp2bar = bar_total;
  out.cp2_finite = cp2_fin;
  out.cp2bar_finite = bar_fin;

  // a zero on either side means the knot is slice, so both sides are zero
  if ((out.cp2 && *out.cp2 == 0) || (out.cp2bar && *out.cp2bar == 0)) {
    if (out.cp2 && *out.cp2 == 0 && !(out.cp2bar && *out.cp2bar == 0)) {
      out.cp2bar = 0;
      out.cp2bar_finite = true;
      out.rules.push_back({Side::CP2Bar, 0, "slice: the positive side already reached zero"});
    }
    if (out.cp2bar && *out.cp2bar == 0 && !(out.cp2 && *out.cp2 == 0)) {
      out.cp2 = 0;
      out.cp2_finite = true;
      out.rules.push_back({Side::CP2, 0, "slice: the negative side already reached zero"});
    }
  }

  // flat-side totals: per-summand minimum of the flat rule and the smooth cost
  {
    bool ok_top = true, ok_bar_top = true;
    long long top = 0, bar_top = 0;
    for (const auto& c : costs) {
      std::optional<long long> t = c.cp2top;
      if (c.cp2 && (!t || *c.cp2 < *t)) t = c.cp2;
      if (!t) ok_top = false;
      else top += *t;
      std::optional<long long> bt = c.cp2bar_top;
      if (c.cp2bar && (!bt || *c.cp2bar < *bt)) bt = c.cp2bar;
      if (!bt) ok_bar_top = false;
      else bar_top += *bt;
    }
    if (ok_top) out.cp2top = top;
    if (ok_bar_top) out.cp2bar_top = bar_top;
  }
  // pairing can only improve the smooth totals, which also cap the flat sides
  if (out.cp2 && (!out.cp2top || *out.cp2 < *out.cp2top)) out.cp2top = out.cp2;
  if (out.cp2bar && (!out.cp2bar_top || *out.cp2bar < *out.cp2bar_top)) out.cp2bar_top = out.cp2bar;

  return out;
}

}  // namespace cpslice
