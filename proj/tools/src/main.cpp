#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "edslab/error.hpp"
#include "selftest.hpp"
#include "serialize.hpp"

using namespace edslab;
using edslab::cli::json;
using edslab::cli::to_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  long precision_bits = kDefaultPrecision;
  std::uint64_t factor_budget = FactorBudget{}.operations;
  int r_max = 3;
  std::string output;
  std::string format = "json";
  unsigned threads = 0;
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    if (j.contains("decimal") && j.contains("bits") && j.size() == 2) {
      os << prefix << " = " << j["decimal"].get<std::string>() << '\n';
      return;
    }
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const RunConfig& cfg, const json& j) {
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot write " + cfg.output);
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  if (cfg.format == "text") flatten(j, "", os);
  else os << j.dump(2) << '\n';
}

int fail(const std::string& error, const std::string& detail, int code) {
  std::cerr << json{{"error", error}, {"detail", detail}}.dump() << '\n';
  return code;
}

Isogeny parse_isogeny(const Curve& E, const std::string& spec) {
  if (spec == "id") return identity_isogeny(E);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "isogeny must be mult:m or kernel:c0,c1,...");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "mult") {
    long m = 0;
    try {
      m = std::stol(arg);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad multiplier '" + arg + "'");
    }
    return multiplication(E, m);
  }
  if (kind == "kernel") return velu(E, Poly::parse(arg));
  throw Error(ErrorCode::ParseError, "unknown isogeny kind '" + kind + "'");
}

BigFloat number(const std::string& text, const RunConfig& cfg) {
  try {
    return BigFloat::from_string(text, cfg.precision_bits);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
  }
}

json curve_info(const Curve& E, const RunConfig& cfg) {
  MinimalModel mm = minimal_model(E);
  json bad = json::array();
  for (const auto& p : bad_primes(mm.curve)) {
    ReductionInfo info = tate_reduction(mm.curve, p);
    bad.push_back(json{{"p", to_json(p)},
                       {"kodaira", info.kodaira_string()},
                       {"ord_disc", info.ord_disc},
                       {"conductor_exponent", info.conductor_exponent}});
  }
  json out{{"curve", to_json(E)},
           {"b2", to_json(E.b2)},
           {"b4", to_json(E.b4)},
           {"b6", to_json(E.b6)},
           {"b8", to_json(E.b8)},
           {"c4", to_json(E.c4)},
           {"c6", to_json(E.c6)},
           {"discriminant", to_json(E.disc)},
           {"j", to_json(E.j)},
           {"minimal", is_minimal(E)},
           {"minimal_model", to_json(mm.curve)},
           {"bad_primes", bad}};
  try {
    ConductorReport cr = conductor_and_szpiro(mm.curve, cfg.precision_bits);
    out["conductor"] = to_json(cr.conductor);
    out["szpiro_ratio"] = to_json(cr.szpiro);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateSzpiro) throw;
    out["conductor"] = nullptr;
    out["szpiro_ratio"] = nullptr;
  }
  out["curve_height"] = to_json(curve_height(mm.curve, cfg.precision_bits));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("EDSLAB_PRECISION")) {
    try {
      cfg.precision_bits = std::stol(env);
    } catch (const std::exception&) {
      return fail("ParseError", "EDSLAB_PRECISION must be an integer", kExitPrecondition);
    }
  }

  CLI::App app{"Elliptic divisibility sequences, heights, isogeny bounds and prime-power sieving"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--budget", cfg.factor_budget, "factoring budget in modular multiplications")->check(CLI::PositiveNumber);
  app.add_option("--r-max", cfg.r_max, "largest discriminant exponent for Thue right-hand sides")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", cfg.threads, "worker threads (0: available parallelism)");

  std::string curve_text, point_text, isogeny_text = "mult:2";
  long n = 1, max_n = 10;

  auto* curve_cmd = app.add_subcommand("curve", "curve invariants")->require_subcommand(1);
  auto* curve_info_cmd = curve_cmd->add_subcommand("info", "discriminant, j, reduction types, conductor");
  curve_info_cmd->add_option("--curve", curve_text, "[a1,a2,a3,a4,a6]")->required();

  auto* eds_cmd = app.add_subcommand("eds", "elliptic divisibility sequence terms")->require_subcommand(1);
  auto* eds_term = eds_cmd->add_subcommand("term", "A_n, B_n, C_n of nP");
  auto* eds_seq = eds_cmd->add_subcommand("seq", "terms 1..max-n");
  for (auto* c : {eds_term, eds_seq}) {
    c->add_option("--curve", curve_text)->required();
    c->add_option("--point", point_text, "x,y")->required();
  }
  eds_term->add_option("--n", n)->required()->check(CLI::Range(1L, 1L << 20));
  eds_seq->add_option("--max-n", max_n)->required()->check(CLI::Range(1L, 1L << 20));

  auto* heights_cmd = app.add_subcommand("heights", "naive, canonical and local heights");
  heights_cmd->add_option("--curve", curve_text)->required();
  heights_cmd->add_option("--point", point_text)->required();

  std::string kernel_text;
  long m = 2;
  auto* iso_cmd = app.add_subcommand("isogeny", "isogenies")->require_subcommand(1);
  auto* iso_velu = iso_cmd->add_subcommand("velu", "isogeny from a kernel polynomial");
  iso_velu->add_option("--curve", curve_text)->required();
  iso_velu->add_option("--kernel", kernel_text, "coefficients c0,c1,... low degree first")->required();
  auto* iso_mult = iso_cmd->add_subcommand("mult", "multiplication by m");
  iso_mult->add_option("--curve", curve_text)->required();
  iso_mult->add_option("--m", m)->required()->check(CLI::Range(1L, 64L));

  std::string hP = "1", hSigmaP = "1", hE = "1", hEprime = "1", eps = "0", M = "0", Mprime = "0", S = "1", C = "1";
  std::string a_text = "1", b_text = "1", A_text = "1";
  long d = 2, deg_st = 4, n1 = 9, n2 = 11, n3 = 13;
  auto* bounds_cmd = app.add_subcommand("bounds", "explicit index bounds")->require_subcommand(1);
  auto add_heights = [&](CLI::App* c) {
    c->add_option("--h-P", hP, "canonical height of P'");
    c->add_option("--h-sigma-P", hSigmaP, "canonical height of sigma(P')");
    c->add_option("--h-E", hE, "height of the codomain");
    c->add_option("--h-E-prime", hEprime, "height of the domain");
  };
  auto* b_szpiro = bounds_cmd->add_subcommand("szpiro", "C_sigma from the Szpiro ratio");
  b_szpiro->add_option("--S", S);
  auto* b_thm12 = bounds_cmd->add_subcommand("thm12", "composite, N1 and N3 bounds");
  b_thm12->add_option("--C", C);
  b_thm12->add_option("--h-sigma-P", hSigmaP);
  auto* b_siegel = bounds_cmd->add_subcommand("siegel", "Siegel-type bounds from eps and M");
  add_heights(b_siegel);
  b_siegel->add_option("--d", d);
  b_siegel->add_option("--eps", eps);
  b_siegel->add_option("--M", M);
  b_siegel->add_option("--M-prime", Mprime);
  auto* b_david = bounds_cmd->add_subcommand("david", "archimedean height bound from linear forms in logarithms");
  b_david->add_option("--h-E", hE);
  b_david->add_option("--h-P", hP);
  b_david->add_option("--n", n)->required();
  auto* b_nonuni = bounds_cmd->add_subcommand("nonuniform", "non-uniform new-prime bounds");
  add_heights(b_nonuni);
  auto* b_bounded = bounds_cmd->add_subcommand("bounded-component", "bound for points on the bounded component");
  b_bounded->add_option("--h-P", hP);
  b_bounded->add_option("--h-E-prime", hEprime);
  auto* b_doubly = bounds_cmd->add_subcommand("doubly-magnified", "degree threshold for doubly magnified points");
  b_doubly->add_option("--h-P", hP);
  b_doubly->add_option("--h-E", hE, "height of the base curve");
  auto* b_magsiegel = bounds_cmd->add_subcommand("magnified-siegel", "7h(E') + 8 + log deg");
  b_magsiegel->add_option("--h-E-prime", hEprime);
  b_magsiegel->add_option("--deg", deg_st);
  auto* b_gap = bounds_cmd->add_subcommand("gap", "gap principle for three coprime indices");
  add_heights(b_gap);
  b_gap->add_option("--n1", n1);
  b_gap->add_option("--n2", n2);
  b_gap->add_option("--n3", n3);
  auto* b_lll = bounds_cmd->add_subcommand("lll", "minimal index for the gap principle");
  add_heights(b_lll);
  auto* b_n2 = bounds_cmd->add_subcommand("n2log", "bound on n with n^2 <= a(log n + 1)^d + b");
  b_n2->add_option("--a", a_text);
  b_n2->add_option("--b", b_text);
  b_n2->add_option("--d", d);
  b_n2->add_option("--A", A_text);

  auto* sieve_cmd = app.add_subcommand("sieve", "classify B_{nP'} and B_{n sigma(P')}");
  std::string json_path;
  sieve_cmd->add_option("--curve", curve_text)->required();
  sieve_cmd->add_option("--point", point_text)->required();
  sieve_cmd->add_option("--isogeny", isogeny_text, "mult:m, kernel:c0,c1,... or id");
  sieve_cmd->add_option("--max-n", max_n)->required()->check(CLI::Range(1L, 1L << 16));
  sieve_cmd->add_option("--json", json_path, "write the record array to this file");

  std::string rhs_text;
  long box = 100;
  auto* thue_cmd = app.add_subcommand("thue", "Thue equation instances")->require_subcommand(1);
  auto* thue_emit = thue_cmd->add_subcommand("emit", "instances for index n");
  thue_emit->add_option("--curve", curve_text)->required();
  thue_emit->add_option("--point", point_text)->required();
  thue_emit->add_option("--isogeny", isogeny_text);
  thue_emit->add_option("--n", n)->required()->check(CLI::Range(1L, 1L << 16));
  auto* thue_brute = thue_cmd->add_subcommand("brute", "small solutions of F(X, Z) = rhs");
  thue_brute->add_option("--curve", curve_text)->required();
  thue_brute->add_option("--isogeny", isogeny_text);
  thue_brute->add_option("--rhs", rhs_text)->required();
  thue_brute->add_option("--box", box)->check(CLI::Range(1L, 100000L));

  std::string ea_A;
  long ea_m = 0;
  auto* ea_cmd = app.add_subcommand("ea", "the family y^2 = x(x^2 - A)")->require_subcommand(1);
  auto* ea_check = ea_cmd->add_subcommand("check", "reduction table, height inequalities, compositeness");
  ea_check->add_option("--A", ea_A)->required();
  ea_check->add_option("--point", point_text)->required();
  ea_check->add_option("--max-n", max_n)->check(CLI::Range(1L, 200L));
  ea_check->add_option("--m", ea_m, "odd multiplier for the bounded-component proposition");

  auto* selftest_cmd = app.add_subcommand("selftest", "property checks on the bundled fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << '\n';
    return fail("UsageError", e.what(), kExitPrecondition);
  }
  if (cfg.precision_bits < 64) return fail("PreconditionViolated", "precision must be at least 64 bits", kExitPrecondition);

  FactorBudget budget;
  budget.operations = cfg.factor_budget;
  long prec = cfg.precision_bits;
  int code = kExitOk;

  try {
    if (curve_info_cmd->parsed()) {
      emit(cfg, curve_info(curve_from_string(curve_text), cfg));
    } else if (eds_term->parsed() || eds_seq->parsed()) {
      Curve E = curve_from_string(curve_text);
      Point P = Point::parse(point_text);
      if (!on_curve(E, P)) throw Error(ErrorCode::PointNotOnCurve, point_text);
      if (eds_term->parsed()) {
        emit(cfg, to_json(term(E, P, n)));
      } else {
        json terms = json::array();
        for (const auto& t : sequence(E, P, max_n)) terms.push_back(to_json(t));
        emit(cfg, json{{"curve", to_json(E)}, {"point", to_json(P)}, {"terms", terms}});
      }
    } else if (heights_cmd->parsed()) {
      Curve E = curve_from_string(curve_text);
      Point P = Point::parse(point_text);
      json out = to_json(canonical_height(E, P, prec));
      out = json{{"curve", to_json(E)}, {"point", to_json(P)}, {"heights", out}};
      emit(cfg, out);
    } else if (iso_velu->parsed()) {
      emit(cfg, to_json(velu(curve_from_string(curve_text), Poly::parse(kernel_text))));
    } else if (iso_mult->parsed()) {
      emit(cfg, to_json(multiplication(curve_from_string(curve_text), m)));
    } else if (bounds_cmd->parsed()) {
      BoundInputs in(prec);
      in.h_P = number(hP, cfg);
      in.h_sigmaP = number(hSigmaP, cfg);
      in.hE = number(hE, cfg);
      in.hEprime = number(hEprime, cfg);
      in.d = d;
      in.eps = number(eps, cfg);
      in.M = number(M, cfg);
      in.Mprime = number(Mprime, cfg);
      auto single = [](const std::string& name, BoundMeaning meaning, const BigFloat& v) {
        BoundReport r;
        r.name = name;
        r.meaning = meaning;
        r.value = v;
        r.branches.push_back({"value", v});
        return to_json(r);
      };
      auto scalar = [](const std::string& name, const BigFloat& v) { return json{{"name", name}, {"value", to_json(v)}}; };
      json out;
      if (b_szpiro->parsed()) {
        out = scalar("szpiro_constant", szpiro_constant(number(S, cfg)));
      } else if (b_thm12->parsed()) {
        Theorem12Bounds t = theorem12_bounds(number(C, cfg), in.h_sigmaP);
        out = json{{"composite", to_json(t.composite)}, {"N1", to_json(t.N1)}, {"N3", to_json(t.N3)}};
      } else if (b_siegel->parsed()) {
        SiegelBounds s = siegel_bounds(in);
        out = json{{"bound1", single("siegel_prime", BoundMeaning::IndexExceedingImpliesNewPrime, s.bound1)},
                   {"bound2", single("siegel_image", BoundMeaning::IndexExceedingImpliesNewPrime, s.bound2)}};
      } else if (b_david->parsed()) {
        out = scalar("david_arch_bound", david_arch_bound(in.hE, in.h_P, n));
      } else if (b_nonuni->parsed()) {
        NonuniformBounds nb = nonuniform_bounds(in);
        out = json{{"first", to_json(nb.first)}, {"second", to_json(nb.second)}};
      } else if (b_bounded->parsed()) {
        out = to_json(bounded_component_bounds(in.h_P, in.hEprime));
      } else if (b_doubly->parsed()) {
        out = to_json(doubly_magnified_degree_bounds(in.h_P, in.hE));
      } else if (b_magsiegel->parsed()) {
        out = scalar("magnified_siegel", magnified_siegel_bound(in.hEprime, deg_st));
      } else if (b_gap->parsed()) {
        GapReport g = gap_principle(n1, n2, n3, in);
        out = json{{"bound_caseA", to_json(g.bound_caseA)},
                   {"bound_caseB", to_json(g.bound_caseB)},
                   {"threshold", to_json(g.threshold)},
                   {"hypotheses_ok", g.hypotheses_ok},
                   {"detail", g.detail}};
      } else if (b_lll->parsed()) {
        out = scalar("lll_gap_threshold", lll_gap_threshold(in));
      } else if (b_n2->parsed()) {
        out = single("n2log", BoundMeaning::UpperBoundOnIndex,
                     solve_n2_log(number(a_text, cfg), number(b_text, cfg), d, number(A_text, cfg)));
      }
      emit(cfg, out);
    } else if (sieve_cmd->parsed()) {
      Curve E = curve_from_string(curve_text);
      Point P = Point::parse(point_text);
      Isogeny sigma = parse_isogeny(E, isogeny_text);
      SieveOptions opt;
      opt.budget = budget;
      opt.threads = cfg.threads;
      json out = json::array();
      for (const auto& r : sieve_magnified(sigma, P, max_n, opt)) {
        if (r.class_P.cofactor_status == CofactorStatus::Unknown ||
            r.class_sigma.cofactor_status == CofactorStatus::Unknown)
          code = kExitBudget;
        out.push_back(to_json(r));
      }
      RunConfig c = cfg;
      if (!json_path.empty()) c.output = json_path;
      emit(c, out);
    } else if (thue_emit->parsed()) {
      Curve E = curve_from_string(curve_text);
      Point P = Point::parse(point_text);
      Isogeny sigma = parse_isogeny(E, isogeny_text);
      try {
        emit(cfg, to_json(emit_thue(sigma, n, P, cfg.r_max, prec)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FirstAlternative) throw;
        emit(cfg, json{{"n", n}, {"first_alternative", true}, {"detail", e.detail()}});
      }
    } else if (thue_brute->parsed()) {
      Curve E = curve_from_string(curve_text);
      Isogeny sigma = parse_isogeny(E, isogeny_text);
      ThueInstance inst = thue_template(sigma, prec);
      if (inst.rhs.set_str(rhs_text, 10) != 0) throw Error(ErrorCode::ParseError, "bad rhs '" + rhs_text + "'");
      json sols = json::array();
      for (const auto& [X, Z] : brute_force_thue(inst, box)) sols.push_back(json::array({to_json(X), to_json(Z)}));
      emit(cfg, json{{"instance", to_json(inst)}, {"box", box}, {"solutions", sols}});
    } else if (ea_check->parsed()) {
      mpz_class A;
      if (A.set_str(ea_A, 10) != 0) throw Error(ErrorCode::ParseError, "bad A '" + ea_A + "'");
      Point P = Point::parse(point_text);
      EAParams ea = ea_params(A);
      json table = json::array();
      for (const auto& r : ea_reduction_table(A)) {
        std::string tate = tate_reduction(ea.curve, r.p).kodaira_string();
        table.push_back(json{{"p", to_json(r.p)}, {"kodaira", r.kodaira_string()}, {"tate", tate}, {"agrees", tate == r.kodaira_string()}});
      }
      json diff = json::array(), lower = json::array(), even = json::array(), odd = json::array();
      for (long k = 1; k <= std::min<long>(max_n, 6); ++k) {
        Point Q = point_mul(ea.curve, k, P);
        EADifference dc = ea_height_difference_check(A, Q, prec);
        diff.push_back(json{{"n", k}, {"difference", to_json(dc.difference)}, {"lower", to_json(dc.lower)},
                            {"upper", to_json(dc.upper)}, {"ok", dc.ok}});
        if (Q.x >= 0 && Q.x * Q.x >= A) {
          EAHeightBound hb = ea_height_lower_bound(A, Q, prec);
          lower.push_back(json{{"n", k}, {"height", to_json(hb.height)}, {"bound", to_json(hb.bound)}, {"ok", hb.ok}});
        }
      }
      for (long k = 1; 2 * k <= max_n; ++k) even.push_back(to_json(ea_even_index_composite(A, P, k)));
      if (ea_m) {
        for (long k = 1; k <= max_n; ++k) odd.push_back(to_json(ea_odd_multiple_composite(A, P, ea_m, k)));
      }
      emit(cfg, json{{"A", to_json(A)},
                     {"class2", ea_class2_name(ea.class2)},
                     {"reduction_table", table},
                     {"double_good_reduction", ea_double_good_reduction(A, P)},
                     {"height_difference", diff},
                     {"height_lower_bound", lower},
                     {"even_index", even},
                     {"odd_multiple", ea_m ? odd : json(nullptr)}});
    } else if (selftest_cmd->parsed()) {
      json report = edslab::cli::run_selftest(prec);
      emit(cfg, report);
      if (!report["ok"].get<bool>()) code = kExitPrecondition;
    }
  } catch (const Error& e) {
    return fail(error_name(e.code()), e.detail(), e.code() == ErrorCode::BudgetExhausted ? kExitBudget : kExitPrecondition);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), kExitPrecondition);
  }
  return code;
}
