#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpslice/report.hpp"

namespace cpslice {

struct RowResult {
  bool pass = false;
  std::string expected;
  std::string computed;
  double millis = 0.0;
};

struct ReproRow {
  int criterion = 0;
  std::string id;
  std::string description;
  bool fast = true;
  std::function<RowResult()> run;
};

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream expected, computed;
  void eq_text(const std::string& what, const std::string& want, const std::string& got) {
    expected << what << "=" << want << "; ";
    computed << what << "=" << got << "; ";
    if (want != got) ok = false;
  }
  template <typename A, typename B>
  void eq(const std::string& what, const A& want, const B& got) {
    std::ostringstream w, g;
    w << want;
    g << got;
    eq_text(what, w.str(), g.str());
  }
  void require(const std::string& what, bool cond) {
    expected << what << "; ";
    computed << (cond ? what : "NOT(" + what + ")") << "; ";
    if (!cond) ok = false;
  }
  RowResult done(double ms) {
    RowResult r;
    r.pass = ok;
    r.expected = expected.str();
    r.computed = computed.str();
    r.millis = ms;
    return r;
  }
};

template <typename F>
RowResult timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  f(c);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c.done(ms);
}

inline std::string side_summary(const SideBound& b) {
  std::ostringstream os;
  os << b.status() << "[" << b.lower << ",";
  if (b.upper) os << *b.upper;
  else if (b.infinite) os << "inf";
  else if (b.finite) os << "<inf";
  else os << "?";
  os << "]";
  return os.str();
}

}  // namespace detail

inline std::vector<ReproRow> repro_rows() {
  using detail::Check;
  using detail::side_summary;
  using detail::timed;
  std::vector<ReproRow> rows;

  // 1. the twist-sum instance K_3 # K_5
  rows.push_back({1, "ex4.3", "rank-4 chain lattice obstructed at m=1; bounds for K(3)#K(5)", true, [] {
    return timed([](Check& c) {
      auto filling = neg_filling_of(parse_knot("K(3)#K(5)"));
      c.require("filling exists", filling.lattice.has_value());
      Mat want = {{Int(-7), Int(1), Int(0), Int(0)},
                  {Int(1), Int(-2), Int(0), Int(0)},
                  {Int(0), Int(0), Int(-11), Int(1)},
                  {Int(0), Int(0), Int(1), Int(-2)}};
      c.require("gram matches the two-chain form", filling.lattice->gram() == want);
      auto out = donaldson_obstruction(*filling.lattice, 1);
      c.eq("verdict(m=1)", "Obstructed", to_string(out.verdict));
      auto rep = compute_bounds(parse_knot("K(3)#K(5)"));
      c.eq("cp2bar", "exact[2,2]", side_summary(rep.cp2bar));
      c.eq("cp2", "range[2,4]", side_summary(rep.cp2));
    });
  }});

  // 2. twist sums: the reversed-orientation slicing number equals the number of summands
  {
    const std::vector<std::vector<long long>> lists = {{3}, {3, 5}, {3, 4, 5}};
    for (std::size_t li = 0; li < lists.size(); ++li) {
      std::string id = "prop4.1." + std::string(1, static_cast<char>('a' + li));
      bool fast = li < 2;
      std::vector<long long> as = lists[li];
      rows.push_back({2, id, "u_cp2bar of a twist-knot sum equals the summand count", fast, [as] {
        return timed([&as](Check& c) {
          std::string text;
          for (long long a : as) text += (text.empty() ? "" : "#") + ("K(" + std::to_string(a) + ")");
          int n = static_cast<int>(as.size());
          auto mirror_filling = neg_filling_of(parse_knot(text).mirror_expr());
          c.require("mirror filling exists", mirror_filling.lattice.has_value());
          auto at_nm1 = donaldson_obstruction(*mirror_filling.lattice, n - 1);
          c.eq("verdict(m=n-1)", "Obstructed", to_string(at_nm1.verdict));
          auto at_n = donaldson_obstruction(*mirror_filling.lattice, n);
          c.eq("verdict(m=n)", "Inconclusive", to_string(at_n.verdict));
          c.require("witness verifies", at_n.witness.has_value() &&
                                            verify_witness(*mirror_filling.lattice, n, *at_n.witness));
          auto rep = compute_bounds(parse_knot(text));
          c.eq("cp2bar", "exact[" + std::to_string(n) + "," + std::to_string(n) + "]",
               side_summary(rep.cp2bar));
        });
      }});
    }
  }

  // 3. mixed twist sum: certified lower bound or an explicit budget report
  rows.push_back({3, "prop4.4", "K(3)#K(3)#-K(5)#-K(5) has u_cp2 >= 2 (or reports the budget)", false, [] {
    return timed([](Check& c) {
      auto rep = compute_bounds(parse_knot("K(3)#K(3)#-K(5)#-K(5)"));
      bool budget = rep.engine.value("budget_exhausted", false);
      c.require("cp2 lower >= 2 or budget reported", rep.cp2.lower >= 2 || budget);
      c.require("cp2bar lower >= 0", rep.cp2bar.lower >= 0);
    });
  }});

  // 4. 3-strand pretzels: equations and lattice search agree, bound exact
  for (int q = 1; q <= 3; ++q) {
    rows.push_back({4, "cor5.6.q" + std::to_string(q),
                    "u_cp2(P(p,-p-" + std::to_string(2 * q) + ",r)) = " + std::to_string(q), true, [q] {
      return timed([q](Check& c) {
        for (long long p : {3LL, 5LL}) {
          long long r = p + 2 * q + 2;
          std::vector<long long> pos = {p, r}, neg = {-p - 2 * q};
          std::string name = "P(" + std::to_string(p) + "," + std::to_string(-p - 2 * q) + "," +
                             std::to_string(r) + ")";
          auto lattice = pretzel_plumbing(pos, neg);
          for (int m = 0; m <= q; ++m) {
            auto eq = pretzel_condition(pos, neg, m);
            auto emb = donaldson_obstruction(lattice, m);
            bool eq_blocked = eq.verdict == PretzelVerdict::Unsolvable;
            bool emb_blocked = emb.verdict == ObstructionVerdict::Obstructed;
            c.require(name + " m=" + std::to_string(m) + " agree", eq_blocked == emb_blocked);
            c.require(name + " m=" + std::to_string(m) + (m < q ? " blocked" : " open"),
                      eq_blocked == (m < q));
          }
          auto rep = compute_bounds(parse_knot(name));
          c.eq(name + " cp2", "exact[" + std::to_string(q) + "," + std::to_string(q) + "]",
               side_summary(rep.cp2));
        }
      });
    }});
  }

  // 5. the 5-strand uniform pretzel
  rows.push_back({5, "cor5.9", "u_cp2(P(3,-5,3,-5,3)) = 2 via the slicing equations", true, [] {
    return timed([](Check& c) {
      auto eq1 = pretzel_condition({3, 3, 3}, {-5, -5}, 1);
      c.eq("equations m=1", "Unsolvable", eq1.verdict == PretzelVerdict::Unsolvable ? "Unsolvable" : "Solvable");
      auto rules = upper_rules(parse_knot("P(3,-5,3,-5,3)"));
      c.require("upper rule gives 2", rules.cp2 && *rules.cp2 == 2);
      auto rep = compute_bounds(parse_knot("P(3,-5,3,-5,3)"));
      c.eq("cp2", "exact[2,2]", side_summary(rep.cp2));
    });
  }});

  // 6. decomposition search separates the flat and smooth numbers
  rows.push_back({6, "prop6.1", "verified n=1 decompositions; flat bound 1 below smooth k", true, [] {
    return timed([](Check& c) {
      const std::vector<std::pair<long long, long long>> cases = {{3, 1}, {3, 2}, {5, 2}, {3, 3}};
      for (auto [p, kk] : cases) {
        long long b = -p - 2 * kk, r = 3 * p + 8 * kk - 2;
        auto a = pretzel3_seifert(p, b, r);
        auto res = thm14_search(a);
        c.require("found n=1 for p=" + std::to_string(p) + ",k=" + std::to_string(kk),
                  res.status == SearchStatus::Found && res.decomposition->n() == 1);
        if (res.decomposition)
          c.require("decomposition verifies", verify_decomposition(a, *res.decomposition));
        Int det = (Int(4 * kk + p) * (4 * kk + p)) - 4 * kk;
        c.require("determinant agrees", knot_determinant(a) == det);
        c.require("determinant non-square", !is_perfect_square(det));
      }
      for (auto [p, kk] : std::vector<std::pair<long long, long long>>{{3, 2}, {3, 3}}) {
        long long b = -p - 2 * kk, r = 3 * p + 8 * kk - 2;
        std::string name = "P(" + std::to_string(p) + "," + std::to_string(b) + "," + std::to_string(r) + ")";
        auto rep = compute_bounds(parse_knot(name));
        c.eq(name + " cp2_top", "exact[1,1]", side_summary(rep.cp2top));
        c.eq(name + " cp2", "exact[" + std::to_string(kk) + "," + std::to_string(kk) + "]",
             side_summary(rep.cp2));
      }
    });
  }});

  // 7. the genus-one property suite
  rows.push_back({7, "prop1.7", "1000 seeded genus-one forms: sigma 2 infinite, otherwise n <= 4 verified", true, [] {
    return timed([](Check& c) {
      std::mt19937 rng(20260808u);
      std::uniform_int_distribution<long long> entry(-9, 8);
      std::uniform_int_distribution<int> coin(0, 1);
      int infinite_count = 0, bounded = 0, failures = 0;
      for (int i = 0; i < 1000; ++i) {
        long long a = entry(rng), b = entry(rng), cc = entry(rng);
        Mat m = coin(rng) ? Mat{{Int(a), Int(b + 1)}, {Int(b), Int(cc)}}
                          : Mat{{Int(a), Int(b)}, {Int(b + 1), Int(cc)}};
        SeifertMatrix s(m);
        int sig = signature(s);
        auto out = genus_one_top_bound(s);
        if (sig == 2) {
          if (!out.infinite) ++failures;
          else ++infinite_count;
          continue;
        }
        if (out.infinite || !out.decomposition || out.decomposition->n() > 4 ||
            !verify_decomposition(s, *out.decomposition))
          ++failures;
        else
          ++bounded;
      }
      c.eq("failures", 0, failures);
      c.eq("total", 1000, infinite_count + bounded);
    });
  }});

  // 8. oracle equivalences
  rows.push_back({8, "oracles.bryant", "pretzel signature formula vs Seifert signature, odd triples in [-15,15]^3", true, [] {
    return timed([](Check& c) {
      int mismatches = 0, count = 0;
      for (long long p = -15; p <= 15; p += 2)
        for (long long q = -15; q <= 15; q += 2)
          for (long long r = -15; r <= 15; r += 2) {
            ++count;
            if (bryant_signature({p, q, r}) != signature(pretzel3_seifert(p, q, r))) ++mismatches;
          }
      c.eq("mismatches", 0, mismatches);
      c.eq("triples", 16 * 16 * 16, count);
    });
  }});
  rows.push_back({8, "oracles.alexander", "closed-form pretzel Alexander vs Seifert determinant, same range", true, [] {
    return timed([](Check& c) {
      int mismatches = 0;
      for (long long p = -15; p <= 15; p += 2)
        for (long long q = -15; q <= 15; q += 2)
          for (long long r = -15; r <= 15; r += 2)
            if (!equal_up_to_units(alexander(pretzel3_seifert(p, q, r)), pretzel3_alexander(p, q, r)))
              ++mismatches;
      c.eq("mismatches", 0, mismatches);
    });
  }});
  rows.push_back({8, "oracles.embed", "reduced vs unreduced embedding search, all rank <= 3 forms with diagonal >= -4", false, [] {
    return timed([](Check& c) {
      long long mismatches = 0, lattices = 0;
      auto compare = [&](const IntegralLattice& l) {
        ++lattices;
        for (int m = 0; m <= 1; ++m) {
          auto fast = donaldson_obstruction(l, m);
          auto slow = donaldson_obstruction_brute(l, m);
          if (fast.verdict != slow.verdict) ++mismatches;
        }
      };
      for (long long d1 = -4; d1 <= -1; ++d1) compare(IntegralLattice(Mat{{Int(d1)}}));
      for (long long d1 = -4; d1 <= -1; ++d1)
        for (long long d2 = -4; d2 <= -1; ++d2)
          for (long long b = -4; b <= 4; ++b) {
            IntegralLattice l(Mat{{Int(d1), Int(b)}, {Int(b), Int(d2)}});
            if (definiteness(l) == Definiteness::NegativeDefinite) compare(l);
          }
      for (long long d1 = -4; d1 <= -1; ++d1)
        for (long long d2 = -4; d2 <= -1; ++d2)
          for (long long d3 = -4; d3 <= -1; ++d3)
            for (long long b12 = -4; b12 <= 4; ++b12)
              for (long long b13 = -4; b13 <= 4; ++b13)
                for (long long b23 = -4; b23 <= 4; ++b23) {
                  IntegralLattice l(Mat{{Int(d1), Int(b12), Int(b13)},
                                        {Int(b12), Int(d2), Int(b23)},
                                        {Int(b13), Int(b23), Int(d3)}});
                  if (definiteness(l) == Definiteness::NegativeDefinite) compare(l);
                }
      c.eq("mismatches", 0, mismatches);
      c.require("swept a nontrivial family", lattices > 100);
    });
  }});
  rows.push_back({8, "oracles.threesquare", "three-square shape test vs direct enumeration to 10000", true, [] {
    return timed([](Check& c) {
      int mismatches = 0;
      for (long long n = 0; n <= 10000; ++n) {
        bool rep = false;
        for (long long k = 0; k * k <= n && !rep; ++k)
          for (long long l = k; k * k + l * l <= n; ++l) {
            long long rest = n - k * k - l * l;
            long long m = isqrt64(rest);
            if (m * m == rest && m >= l) {
              rep = true;
              break;
            }
          }
        if (rep != three_square(n).has_value()) ++mismatches;
      }
      c.eq("mismatches", 0, mismatches);
    });
  }});

  // 9. continued-fraction identities and lens determinants
  rows.push_back({9, "contfrac", "twist-cover expansions and filling determinants for a = 1..20", true, [] {
    return timed([](Check& c) {
      bool all = true;
      for (long long a = 1; a <= 20; ++a) {
        std::vector<long long> pos_want = {2 * a, 2};
        if (pos_continued_fraction(4 * a + 1, 2) != pos_want) all = false;
        std::vector<long long> neg_want(static_cast<std::size_t>(2 * a - 1), 2);
        neg_want.push_back(3);
        if (neg_continued_fraction(4 * a + 1, 4 * a - 1) != neg_want) all = false;
        auto f = lens_fillings(4 * a + 1, 2);
        Int dn = determinant(f.neg_def), dp = determinant(f.pos_def);
        if ((dn < 0 ? -dn : dn) != 4 * a + 1 || (dp < 0 ? -dp : dp) != 4 * a + 1) all = false;
      }
      c.require("all identities hold for a = 1..20", all);
    });
  }});

  // 10. signature gates on torus knots
  rows.push_back({10, "siggate", "torus sums: flat lower bounds m = 1..5; trefoil infinite on the reversed side", true, [] {
    return timed([](Check& c) {
      for (int m = 1; m <= 5; ++m) {
        SeifertMatrix a;
        for (int i = 0; i < m; ++i) a = connected_sum(a, torus2_seifert(1));
        auto gate = signature_gate(a, 16);
        c.require("lower(top) >= " + std::to_string(m) + " for m=" + std::to_string(m),
                  gate.lower_cp2_top >= m);
        c.eq("sigma(-1) m=" + std::to_string(m), -2 * m, gate.sigma_at_minus_one);
      }
      auto rep = compute_bounds(parse_knot("T(2,3)"));
      c.eq("trefoil cp2bar", "infinite", rep.cp2bar.status());
      c.eq("trefoil cp2bar_top", "infinite", rep.cp2bar_top.status());
      c.eq("trefoil cp2", "exact[1,1]", side_summary(rep.cp2));
    });
  }});

  return rows;
}

// Run rows matched by the selector ("all", "fast", or an id prefix), printing
// one line per row. Returns the number of failures.
inline int run_reproduction(const std::string& selector, std::ostream& os) {
  auto rows = repro_rows();
  int failures = 0, matched = 0;
  for (auto& row : rows) {
    bool take = selector == "all" || (selector == "fast" && row.fast) ||
                row.id.rfind(selector, 0) == 0;
    if (!take) continue;
    ++matched;
    RowResult res = row.run();
    os << (res.pass ? "PASS" : "FAIL") << " criterion " << row.criterion << " [" << row.id << "] "
       << row.description << " (" << static_cast<long long>(res.millis) << " ms)\n";
    if (!res.pass) {
      os << "      expected: " << res.expected << "\n";
      os << "      computed: " << res.computed << "\n";
      ++failures;
    }
  }
  if (matched == 0) {
    os << "no reproduction rows match selector '" << selector << "'\n";
    return 1;
  }
  return failures;
}

}  // namespace cpslice
