#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cpslice/diophantine.hpp"
#include "cpslice/embedder.hpp"
#include "cpslice/knotspec.hpp"
#include "cpslice/upperbound.hpp"

namespace cpslice {

using Json = nlohmann::json;

inline Json json_of_int(const Int& v) {
  if (v <= Int(std::numeric_limits<std::int64_t>::max()) &&
      v >= Int(std::numeric_limits<std::int64_t>::min()))
    return static_cast<std::int64_t>(v);
  return v.str();  // decimal string for anything the wire format cannot hold
}

inline Json json_of_lattice(const IntegralLattice& l) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(json_of_int(l.at(i, j)));
    gram.push_back(row);
  }
  Json out;
  out["rank"] = l.rank();
  out["gram"] = gram;
  out["labels"] = l.labels();
  return out;
}

inline Json json_of_poly(const LaurentPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(json_of_int(c));
  Json out;
  out["min_degree"] = p.min_degree();
  out["coeffs"] = coeffs;
  return out;
}

inline Json json_of_matrix(const Mat& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(json_of_int(x));
    out.push_back(r);
  }
  return out;
}

inline Json json_of_decomposition(const Decomposition& d, bool verified) {
  Json out;
  out["b"] = json_of_matrix(d.b);
  Json cs = Json::array();
  for (const auto& c : d.cs) {
    Json v = Json::array();
    for (const auto& x : c) v.push_back(json_of_int(x));
    cs.push_back(v);
  }
  out["cs"] = cs;
  out["n"] = d.n();
  if (d.basis_change) out["basis_change"] = json_of_matrix(*d.basis_change);
  else out["basis_change"] = nullptr;
  out["verified"] = verified;
  return out;
}

inline Json json_of_witness(const EmbeddingWitness& w) {
  auto rows = [](const std::vector<std::vector<long long>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(v);
    return out;
  };
  Json out;
  out["target_dim"] = w.target_dim;
  out["generator_images"] = rows(w.gen_images);
  out["u_images"] = rows(w.u_images);
  Json ws = Json::array();
  for (const auto& v : w.w_certificates) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(json_of_int(x));
    ws.push_back(row);
  }
  out["w_certificates"] = ws;
  return out;
}

// --- per-side bound state ---------------------------------------------------

struct SideBound {
  long long lower = 0;
  std::optional<long long> upper;
  bool finite = false;    // finiteness is certified even when no count is
  bool infinite = false;  // proven infinite
  std::vector<std::string> notes;

  void raise_lower(long long v, const std::string& why) {
    if (v > lower) {
      lower = v;
      notes.push_back("lower " + std::to_string(v) + ": " + why);
    }
  }
  void drop_upper(long long v, const std::string& why) {
    if (!upper || v < *upper) {
      upper = v;
      finite = true;
      notes.push_back("upper " + std::to_string(v) + ": " + why);
    }
  }
  void mark_finite(const std::string& why) {
    if (!finite) {
      finite = true;
      notes.push_back("finite: " + why);
    }
  }
  void mark_infinite(const std::string& why) {
    if (!infinite) {
      infinite = true;
      notes.push_back("infinite: " + why);
    }
  }

  std::string status() const {
    if (infinite) return "infinite";
    if (upper && lower == *upper) return "exact";
    if (upper || finite) return "range";
    return "unknown";
  }

  void check_consistency(const char* side) const {
    if (infinite && (upper.has_value() || finite))
      throw std::logic_error(std::string("bound state inconsistent (finite and infinite) on ") + side);
    if (upper && lower > *upper)
      throw std::logic_error(std::string("bound state inconsistent (lower > upper) on ") + side);
  }

  Json to_json() const {
    Json out;
    out["lower"] = lower;
    out["upper"] = upper ? Json(*upper) : Json(nullptr);
    out["finite"] = finite || upper.has_value();
    out["status"] = status();
    out["notes"] = notes;
    return out;
  }
};

struct BoundsOptions {
  int m_max = 4;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int signature_samples = 64;
  int thm14_n_max = 4;
  long long thm14_coeff_bound = 8;
  int thm14_basis_depth = 2;
  std::uint64_t thm14_budget = 2000000;
};

struct ObstructionReport {
  std::string input;
  std::string normalized;
  KnotExpression expr;

  int sigma = 0;
  std::optional<Int> det;
  std::optional<LaurentPolynomial> alexander_poly;
  std::optional<long long> genus;
  std::optional<SignatureGateResult> gate;

  SideBound cp2, cp2bar, cp2top, cp2bar_top;

  Json witnesses = Json::object();
  Json engine = Json::object();
  std::vector<std::string> citations;

  Json to_json() const {
    Json out;
    out["knot"] = {{"input", input}, {"normalized", normalized}};
    Json inv;
    inv["signature"] = sigma;
    inv["determinant"] = det ? json_of_int(*det) : Json(nullptr);
    inv["alexander"] = alexander_poly ? json_of_poly(*alexander_poly) : Json(nullptr);
    inv["genus"] = genus ? Json(*genus) : Json(nullptr);
    if (gate) {
      Json samples = Json::array();
      for (const auto& s : gate->samples) {
        Json e;
        e["theta_num"] = s.theta_num;
        e["theta_den"] = s.theta_den;
        e["sigma"] = s.sigma ? Json(*s.sigma) : Json(nullptr);
        samples.push_back(e);
      }
      inv["signature_samples"] = samples;
      inv["samples_skipped"] = gate->skipped;
    } else {
      inv["signature_samples"] = nullptr;
      inv["samples_skipped"] = 0;
    }
    out["invariants"] = inv;
    Json bounds;
    bounds["cp2"] = cp2.to_json();
    bounds["cp2bar"] = cp2bar.to_json();
    bounds["cp2_top"] = cp2top.to_json();
    bounds["cp2bar_top"] = cp2bar_top.to_json();
    out["bounds"] = bounds;
    out["witnesses"] = witnesses;
    out["engine"] = engine;
    out["citations"] = citations;
    return out;
  }
};

namespace detail {

inline std::optional<Int> knot_det_of(const KnotExpression& k) {
  Int acc = 1;
  for (const auto& s : k.summands()) {
    switch (s.kind) {
      case AtomKind::Twist:
        acc *= Int(4 * s.a + 1);
        break;
      case AtomKind::Torus2:
        acc *= Int(2 * s.a + 1);
        break;
      case AtomKind::Pretzel: {
        if (s.params.size() == 3) {
          acc *= knot_determinant(pretzel3_seifert(s.params[0], s.params[1], s.params[2]));
          break;
        }
        // fall back to the definite filling of the (possibly mirrored) atom
        for (int attempt = 0; attempt < 2; ++attempt) {
          std::vector<long long> params = s.params;
          if (attempt == 1)
            for (auto& p : params) p = -p;
          std::vector<long long> pos, neg;
          for (long long p : params) (p > 0 ? pos : neg).push_back(p);
          if (pos.size() != neg.size() + 1) continue;
          bool ok = true;
          for (long long p : pos)
            if (p < 3) ok = false;
          for (long long q : neg)
            if (q > -3) ok = false;
          Rat sum = 0;
          for (long long p : params) sum += reciprocal_of(p);
          if (!ok || !(sum > 0)) continue;
          Int d = determinant(pretzel_plumbing(pos, neg));
          acc *= (d < 0 ? -d : d);
          goto next_atom;
        }
        return std::nullopt;
      }
    }
  next_atom:;
  }
  return acc;
}

// single-pretzel hypotheses for the slicing equations; nullopt when they fail
inline std::optional<std::pair<std::vector<long long>, std::vector<long long>>> pretzel_equation_params(
    const KnotExpression& k, bool mirrored) {
  if (k.summands().size() != 1) return std::nullopt;
  const KnotAtom& s = k.summands()[0];
  if (s.kind != AtomKind::Pretzel) return std::nullopt;
  std::vector<long long> params = s.params;
  if (mirrored)
    for (auto& p : params) p = -p;
  std::vector<long long> pos, neg;
  for (long long p : params) (p > 0 ? pos : neg).push_back(p);
  if (pos.size() != neg.size() + 1 || neg.empty()) return std::nullopt;
  for (long long p : pos)
    if (p < 3) return std::nullopt;
  for (long long q : neg)
    if (q > -3) return std::nullopt;
  Rat sum = 0;
  for (long long p : params) sum += reciprocal_of(p);
  if (!(sum > 0)) return std::nullopt;
  return std::make_pair(pos, neg);
}

}  // namespace detail

// The full pipeline: signature gates, determinant test, cover obstructions on
// both sides, the pretzel equations, crossing-change uppers, and the
// topological constructions, merged into certified per-side bounds.
inline ObstructionReport compute_bounds(const KnotExpression& k, const BoundsOptions& opt = {},
                                        const std::string& input_text = "") {
  ObstructionReport rep;
  rep.expr = k;
  rep.input = input_text.empty() ? k.render() : input_text;
  rep.normalized = k.render();

  auto seifert = seifert_of(k);
  rep.sigma = signature_of(k);
  rep.det = detail::knot_det_of(k);
  if (seifert) {
    rep.alexander_poly = alexander(*seifert);
    rep.genus = static_cast<long long>(seifert->genus());
    if (rep.det && knot_determinant(*seifert) != *rep.det)
      throw std::logic_error("compute_bounds: determinant cross-check failed");
  }
  rep.engine["m_max"] = opt.m_max;
  rep.engine["node_budget"] = opt.node_budget;
  bool budget_exhausted = false;

  // 1. signature gates
  if (seifert) {
    rep.gate = signature_gate(*seifert, opt.signature_samples);
    const auto& g = *rep.gate;
    if (g.cp2_infinite) {
      rep.cp2top.mark_infinite("a regular signature sample is positive");
      rep.cp2.mark_infinite("a regular signature sample is positive");
      rep.citations.push_back("signature bound: H-sliceness forces -2m <= sigma <= 0 at regular samples");
    }
    if (g.cp2bar_infinite) {
      rep.cp2bar_top.mark_infinite("a regular signature sample is negative");
      rep.cp2bar.mark_infinite("a regular signature sample is negative");
      rep.citations.push_back("signature bound applied to the mirror");
    }
    if (g.lower_cp2_top > 0)
      rep.cp2top.raise_lower(g.lower_cp2_top, "signature sample of depth " + std::to_string(2 * g.lower_cp2_top));
    if (g.lower_cp2bar_top > 0)
      rep.cp2bar_top.raise_lower(g.lower_cp2bar_top, "mirror signature sample");
  } else {
    if (rep.sigma > 0) {
      rep.cp2top.mark_infinite("signature is positive");
      rep.cp2.mark_infinite("signature is positive");
    }
    if (rep.sigma < 0) {
      rep.cp2bar_top.mark_infinite("signature is negative");
      rep.cp2bar.mark_infinite("signature is negative");
    }
    rep.cp2top.raise_lower((-rep.sigma + 1) / 2 > 0 ? (-rep.sigma + 1) / 2 : 0, "signature");
    rep.cp2bar_top.raise_lower((rep.sigma + 1) / 2 > 0 ? (rep.sigma + 1) / 2 : 0, "mirror signature");
  }

  // 2. non-square determinant: not even topologically slice, on either side
  if (rep.det && !is_perfect_square(*rep.det)) {
    rep.cp2top.raise_lower(1, "determinant is not a perfect square");
    rep.cp2bar_top.raise_lower(1, "determinant is not a perfect square");
    rep.citations.push_back("Fox-Milnor: a slice knot has square determinant");
  }

  // 3. cover obstruction sweeps (the signature-zero hypothesis is required)
  if (rep.sigma == 0) {
    for (int side = 0; side < 2; ++side) {
      bool bar = side == 1;
      KnotExpression target = bar ? k.mirror_expr() : k;
      auto filling = neg_filling_of(target);
      SideBound& sb = bar ? rep.cp2bar : rep.cp2;
      const char* tag = bar ? "cp2bar" : "cp2";
      if (!filling.lattice) {
        rep.engine[std::string("filling_") + tag] = filling.unsupported_reason;
        continue;
      }
      if (sb.infinite) continue;  // nothing to refine
      auto sweep = min_obstructed_m(*filling.lattice, opt.m_max, opt.node_budget);
      if (sweep.budget_exceeded) budget_exhausted = true;
      Json per_m = Json::array();
      for (std::size_t m = 0; m < sweep.per_m.size(); ++m) {
        Json e;
        e["m"] = m;
        e["verdict"] = to_string(sweep.per_m[m].verdict);
        e["nodes"] = sweep.per_m[m].nodes;
        per_m.push_back(e);
        if (sweep.per_m[m].verdict == ObstructionVerdict::Inconclusive && sweep.per_m[m].witness)
          rep.witnesses[std::string("embedding_") + tag] = json_of_witness(*sweep.per_m[m].witness);
      }
      rep.engine[std::string("obstruction_") + tag] = per_m;
      if (sweep.frontier) {
        sb.raise_lower(*sweep.frontier + 1,
                       "diagonalization obstruction on the double branched cover filling at m = " +
                           std::to_string(*sweep.frontier));
        rep.citations.push_back(
            "double cover of a slice disk complement is definite of half-integer surgery type");
      }
    }
  }

  // 4. pretzel slicing equations, both sides
  for (int side = 0; side < 2; ++side) {
    bool bar = side == 1;
    SideBound& sb = bar ? rep.cp2bar : rep.cp2;
    if (sb.infinite) continue;
    auto params = detail::pretzel_equation_params(k, bar);
    if (!params) continue;
    int last_unsolvable = -1;
    std::optional<PretzelWitness> witness;
    for (int m = 0; m <= opt.m_max; ++m) {
      auto res = pretzel_condition(params->first, params->second, m);
      if (res.verdict == PretzelVerdict::Unsolvable) {
        last_unsolvable = m;
        continue;
      }
      witness = res.witness;
      break;
    }
    if (last_unsolvable >= 0) {
      sb.raise_lower(last_unsolvable + 1,
                     "pretzel slicing equations unsolvable at m = " + std::to_string(last_unsolvable));
      rep.citations.push_back("pretzel chain/leaf equations from the cover embedding");
    }
    if (witness) {
      Json w;
      w["a"] = witness->a;
      w["b"] = witness->b;
      rep.witnesses[bar ? "pretzel_equations_cp2bar" : "pretzel_equations_cp2"] = w;
    }
  }

  // 5. crossing-change uppers
  auto rules = upper_rules(k);
  for (const auto& r : rules.rules) rep.citations.push_back(std::string(to_string(r.side)) + ": " + r.citation);
  if (!rep.cp2.infinite) {
    if (rules.cp2) rep.cp2.drop_upper(*rules.cp2, "positive-to-negative crossing changes");
    else if (rules.cp2_finite) rep.cp2.mark_finite("positively slice without a counted bound");
  }
  if (!rep.cp2bar.infinite) {
    if (rules.cp2bar) rep.cp2bar.drop_upper(*rules.cp2bar, "negative-to-positive crossing changes");
    else if (rules.cp2bar_finite) rep.cp2bar.mark_finite("negatively slice without a counted bound");
  }
  if (!rep.cp2top.infinite && rules.cp2top)
    rep.cp2top.drop_upper(*rules.cp2top, "crossing-change and unit-Alexander rules");
  if (!rep.cp2bar_top.infinite && rules.cp2bar_top)
    rep.cp2bar_top.drop_upper(*rules.cp2bar_top, "mirrored crossing-change and unit-Alexander rules");

  // 6. topological constructions from the Seifert form
  if (seifert) {
    for (int side = 0; side < 2; ++side) {
      bool bar = side == 1;
      SideBound& sb = bar ? rep.cp2bar_top : rep.cp2top;
      SeifertMatrix a = bar ? mirror(*seifert) : *seifert;
      if (a.genus() == 1) {
        auto g1 = genus_one_top_bound(a);
        if (g1.infinite) {
          sb.mark_infinite("genus one with signature 2");
          (bar ? rep.cp2bar : rep.cp2).mark_infinite("genus one with signature 2");
        } else if (!sb.infinite) {
          sb.drop_upper(static_cast<long long>(g1.decomposition->n()), "genus-one decomposition");
          rep.witnesses[bar ? "decomposition_cp2bar_top" : "decomposition_cp2_top"] =
              json_of_decomposition(*g1.decomposition, true);
        }
      }
      if (sb.infinite) continue;
      bool small = a.rank() <= 2;
      Thm14Result t = thm14_search(a, small ? opt.thm14_n_max : 1,
                                   small ? opt.thm14_coeff_bound : 3, small ? opt.thm14_basis_depth : 0,
                                   small ? opt.thm14_budget : opt.thm14_budget / 10);
      if (t.status == SearchStatus::BudgetExceeded) budget_exhausted = true;
      if (t.status == SearchStatus::Found) {
        long long n = static_cast<long long>(t.decomposition->n());
        if (!sb.upper || n < *sb.upper) {
          sb.drop_upper(n, "rank-one decomposition search");
          rep.witnesses[bar ? "decomposition_cp2bar_top" : "decomposition_cp2_top"] =
              json_of_decomposition(*t.decomposition, true);
        }
      }
    }
  }

  // 7. cross-side consistency: flat bounds cap smooth lowers and vice versa
  rep.cp2.raise_lower(rep.cp2top.lower, "topological lower bound");
  rep.cp2bar.raise_lower(rep.cp2bar_top.lower, "topological lower bound");
  if (!rep.cp2top.infinite && rep.cp2.upper && (!rep.cp2top.upper || *rep.cp2.upper < *rep.cp2top.upper))
    rep.cp2top.drop_upper(*rep.cp2.upper, "smooth upper bound");
  if (!rep.cp2bar_top.infinite && rep.cp2bar.upper &&
      (!rep.cp2bar_top.upper || *rep.cp2bar.upper < *rep.cp2bar_top.upper))
    rep.cp2bar_top.drop_upper(*rep.cp2bar.upper, "smooth upper bound");
  if (!rep.cp2top.infinite && rep.cp2.finite) rep.cp2top.mark_finite("smooth side is finite");
  if (!rep.cp2bar_top.infinite && rep.cp2bar.finite) rep.cp2bar_top.mark_finite("smooth side is finite");

  rep.engine["budget_exhausted"] = budget_exhausted;
  rep.cp2.check_consistency("cp2");
  rep.cp2bar.check_consistency("cp2bar");
  rep.cp2top.check_consistency("cp2_top");
  rep.cp2bar_top.check_consistency("cp2bar_top");
  return rep;
}

}  // namespace cpslice
