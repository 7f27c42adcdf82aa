// Command-line front end: invariants, certified slicing-number bounds,
// single obstruction queries, topological upper bounds, and the
// reproduction harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "cpslice/cpslice.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

std::uint64_t env_budget(std::uint64_t fallback) {
  if (const char* s = std::getenv("CPSLICE_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

cpslice::KnotExpression parse_or_exit(const std::string& text) {
  try {
    return cpslice::parse_knot(text);
  } catch (const cpslice::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::exit(kExitParse);
  }
}

void print_side(const std::string& name, const cpslice::SideBound& b) {
  std::cout << "  " << name << ": " << b.status() << "  lower " << b.lower;
  if (b.upper) std::cout << "  upper " << *b.upper;
  else if (b.infinite) std::cout << "  upper infinite";
  else if (b.finite) std::cout << "  upper finite (uncounted)";
  std::cout << "\n";
}

void print_report(const cpslice::ObstructionReport& rep, bool as_json) {
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
    return;
  }
  std::cout << "knot " << rep.normalized << "\n";
  std::cout << "  signature " << rep.sigma;
  if (rep.det) std::cout << "  determinant " << rep.det->str();
  if (rep.alexander_poly) std::cout << "  alexander " << rep.alexander_poly->to_string();
  std::cout << "\n";
  print_side("u_cp2     ", rep.cp2);
  print_side("u_cp2bar  ", rep.cp2bar);
  print_side("u_cp2^top ", rep.cp2top);
  print_side("u_cp2bar^top", rep.cp2bar_top);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified bounds on projective-plane slicing numbers for twist, pretzel and T(2,n) knots"};
  app.require_subcommand(1);

  std::string knot_text;
  bool as_json = false;
  cpslice::BoundsOptions opt;
  opt.node_budget = env_budget(opt.node_budget);

  auto* inv = app.add_subcommand("invariants", "classical invariants of a knot expression");
  inv->add_option("knot", knot_text, "knot expression, e.g. \"K(3)#-P(3,-5,9)\"")->required();
  inv->add_flag("--json", as_json, "emit JSON");

  auto* bounds = app.add_subcommand("bounds", "aggregate certified lower/upper bounds");
  bounds->add_option("knot", knot_text)->required();
  bounds->add_option("--m-max", opt.m_max, "largest m swept by the cover obstruction");
  bounds->add_option("--budget", opt.node_budget, "search node budget");
  bounds->add_flag("--json", as_json, "emit JSON");

  std::string side = "cp2";
  int obstruct_m = 0;
  auto* obstruct = app.add_subcommand("obstruct", "run one cover obstruction query");
  obstruct->add_option("knot", knot_text)->required();
  obstruct->add_option("--side", side, "cp2 or cp2bar")->check(CLI::IsMember({"cp2", "cp2bar"}));
  obstruct->add_option("--m", obstruct_m, "number of projective summands")->required();
  obstruct->add_option("--budget", opt.node_budget, "search node budget");
  obstruct->add_flag("--json", as_json, "emit JSON");

  auto* upper = app.add_subcommand("upper-top", "topological upper bounds from the Seifert form");
  upper->add_option("knot", knot_text)->required();
  upper->add_flag("--json", as_json, "emit JSON");

  std::string selector = "all";
  auto* repro = app.add_subcommand("reproduce", "run the acceptance rows");
  repro->add_option("selector", selector, "all, fast, or a row id prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed() || bounds->parsed()) {
      auto k = parse_or_exit(knot_text);
      if (inv->parsed()) {
        // invariants only: skip the searches by zeroing the sweep depth
        cpslice::BoundsOptions quick = opt;
        quick.m_max = -1;
        quick.thm14_budget = 0;
        auto rep = compute_bounds(k, quick, knot_text);
        if (as_json) {
          cpslice::Json out;
          out["knot"] = {{"input", knot_text}, {"normalized", rep.normalized}};
          out["signature"] = rep.sigma;
          out["determinant"] = rep.det ? cpslice::json_of_int(*rep.det) : cpslice::Json(nullptr);
          out["alexander"] =
              rep.alexander_poly ? cpslice::json_of_poly(*rep.alexander_poly) : cpslice::Json(nullptr);
          out["genus"] = rep.genus ? cpslice::Json(*rep.genus) : cpslice::Json(nullptr);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "knot " << rep.normalized << "\n  signature " << rep.sigma << "\n";
          std::cout << "  determinant " << (rep.det ? rep.det->str() : "unavailable") << "\n";
          std::cout << "  alexander   "
                    << (rep.alexander_poly ? rep.alexander_poly->to_string() : "unavailable") << "\n";
        }
        return kExitOk;
      }
      auto rep = compute_bounds(k, opt, knot_text);
      print_report(rep, as_json);
      return kExitOk;
    }

    if (obstruct->parsed()) {
      auto k = parse_or_exit(knot_text);
      if (cpslice::signature_of(k) != 0) {
        std::cout << "inapplicable: the obstruction needs vanishing signature, got "
                  << cpslice::signature_of(k) << "\n";
        return kExitOk;
      }
      auto target = side == "cp2bar" ? k.mirror_expr() : k;
      auto filling = cpslice::neg_filling_of(target);
      if (!filling.lattice) {
        std::cerr << "unsupported: " << filling.unsupported_reason << "\n";
        return kExitUnsupported;
      }
      auto out = cpslice::donaldson_obstruction(*filling.lattice, obstruct_m, opt.node_budget);
      if (as_json) {
        cpslice::Json j;
        j["knot"] = knot_text;
        j["side"] = side;
        j["m"] = obstruct_m;
        j["verdict"] = to_string(out.verdict);
        j["nodes"] = out.nodes;
        j["filling"] = cpslice::json_of_lattice(*filling.lattice);
        if (out.witness) j["witness"] = cpslice::json_of_witness(*out.witness);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(out.verdict) << " (side " << side << ", m = " << obstruct_m << ", "
                  << out.nodes << " nodes)\n";
        if (out.verdict == cpslice::ObstructionVerdict::Obstructed)
          std::cout << "  hence not H-slice there; u_" << side << " >= " << obstruct_m + 1 << "\n";
      }
      return out.verdict == cpslice::ObstructionVerdict::BudgetExceeded ? kExitBudget : kExitOk;
    }

    if (upper->parsed()) {
      auto k = parse_or_exit(knot_text);
      auto a = cpslice::seifert_of(k);
      if (!a) {
        std::cerr << "unsupported: no Seifert matrix wired for this expression\n";
        return kExitUnsupported;
      }
      cpslice::Json j;
      j["knot"] = knot_text;
      if (a->genus() == 1) {
        auto g1 = cpslice::genus_one_top_bound(*a);
        if (g1.infinite) j["genus_one"] = "infinite";
        else j["genus_one"] = cpslice::json_of_decomposition(*g1.decomposition, true);
      }
      auto t = cpslice::thm14_search(*a, opt.thm14_n_max, opt.thm14_coeff_bound, opt.thm14_basis_depth,
                                     opt.thm14_budget);
      if (t.status == cpslice::SearchStatus::Found)
        j["search"] = cpslice::json_of_decomposition(*t.decomposition, true);
      else
        j["search"] = t.status == cpslice::SearchStatus::BudgetExceeded ? "budget exceeded" : "not found";
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (repro->parsed()) {
      int failures = cpslice::run_reproduction(selector, std::cout);
      return failures == 0 ? kExitOk : 1;
    }
  } catch (const cpslice::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitOk;
}
