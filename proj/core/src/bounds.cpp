#include "edslab/bounds.hpp"

#include <numeric>

#include "edslab/error.hpp"

namespace edslab {

namespace {

// Decimal constants exactly as printed.
namespace k {
constexpr const char* silverman_gap = "1.07";
constexpr const char* david_c1 = "5.9e43";
constexpr const char* david_c2 = "2.81";
constexpr const char* nonuniform_1 = "2.1e30";
constexpr const char* nonuniform_2 = "4.3e27";
constexpr const char* nonuniform_3 = "8.7e23";
constexpr const char* nonuniform_4 = "2e27";
constexpr const char* nonuniform_image_1 = "4.2e30";
constexpr const char* nonuniform_image_3 = "1.7e24";
constexpr const char* nonuniform_image_4 = "4e27";
constexpr const char* thm12_N1_a = "4.2e30";
constexpr const char* thm12_N1_b = "4e27";
constexpr const char* gap_a = "24.42";
constexpr const char* gap_b = "23.42";
}  // namespace k

long prec_of(const BigFloat& x) { return x.precision(); }
BigFloat num(const char* s, long prec) { return BigFloat::from_string(s, prec); }

BoundReport make(const std::string& name, BoundMeaning meaning, std::vector<Branch> branches) {
  BoundReport r;
  r.name = name;
  r.meaning = meaning;
  r.value = branches.front().value;
  for (const auto& b : branches) r.value = max(r.value, b.value);
  r.branches = std::move(branches);
  return r;
}

void require_positive(const BigFloat& h, const char* what) {
  if (!(h > 0)) throw Error(ErrorCode::PreconditionViolated, std::string(what) + " must be positive");
}

}  // namespace

BoundInputs::BoundInputs(long prec)
    : h_P(prec), h_sigmaP(prec), hE(prec), hEprime(prec), eps(prec), M(prec), Mprime(prec), S_sigma(prec), C_sigma(1, prec) {}

const char* meaning_name(BoundMeaning m) {
  switch (m) {
    case BoundMeaning::IndexExceedingImpliesNewPrime: return "IndexExceedingImpliesNewPrime";
    case BoundMeaning::IndexExceedingImpliesTwoNewPrimes: return "IndexExceedingImpliesTwoNewPrimes";
    case BoundMeaning::UpperBoundOnIndex: return "UpperBoundOnIndex";
  }
  return "?";
}

BigFloat solve_n2_log(const BigFloat& a, const BigFloat& b, long d, const BigFloat& A) {
  if (d < 1 || A < 1 || a < 0 || b < 0) throw Error(ErrorCode::PreconditionViolated, "need a, b >= 0, d >= 1, A >= 1");
  long prec = prec_of(a);
  BigFloat two_d(2 * d, prec);
  BigFloat first = A * pow(two_d * log(two_d) + 2 * log(A), d);
  BigFloat second = a / A + sqrt(b);
  return max(first, second);
}

SiegelBounds siegel_bounds(const BoundInputs& in) {
  require_positive(in.h_P, "h(P')");
  if (in.eps < 0 || !(in.eps < 1)) throw Error(ErrorCode::PreconditionViolated, "eps must lie in [0, 1)");
  BigFloat one_eps = 1 - in.eps;
  BigFloat gap2 = in.d * one_eps - 1;
  if (!(gap2 > 0)) throw Error(ErrorCode::HypothesisViolated, "d(1 - eps) <= 1");
  long prec = prec_of(in.h_P);
  SiegelBounds s;
  BigFloat den1 = one_eps * in.h_P;
  s.bound1 = 2 / den1 + sqrt((in.Mprime + in.hEprime + in.h_P) / den1);
  BigFloat den2 = gap2 * in.h_P;
  s.bound2 = 2 / den2 + sqrt((in.M + in.hE + in.d * in.h_P + log(BigFloat(in.d, prec))) / den2);
  return s;
}

BigFloat david_arch_bound(const BigFloat& hE, const BigFloat& hP, long n) {
  if (n <= 1) throw Error(ErrorCode::PreconditionViolated, "n must exceed 1");
  long prec = prec_of(hE);
  BigFloat e = exp(BigFloat(1, prec));
  BigFloat bn = max(max(log(BigFloat(2 * n, prec)), 2 * hP), 12 * e * hE + 5 * e * log(BigFloat(6, prec)));
  return num(k::david_c1, prec) * pow(bn + log(BigFloat(3, prec)) + 1, 6) + hE + num(k::david_c2, prec);
}

NonuniformBounds nonuniform_bounds(const BoundInputs& in) {
  require_positive(in.h_P, "h(P')");
  require_positive(in.h_sigmaP, "h(sigma P')");
  long prec = prec_of(in.h_P);
  BigFloat seven_halves = BigFloat(7, prec) / 2, five_halves = BigFloat(5, prec) / 2;
  NonuniformBounds r;
  r.first = make("nonuniform_prime", BoundMeaning::IndexExceedingImpliesNewPrime,
                 {{"constant", num(k::nonuniform_1, prec)},
                  {"inverse_height", num(k::nonuniform_2, prec) / in.h_P},
                  {"height_power", num(k::nonuniform_3, prec) * pow(in.h_P, five_halves)},
                  {"curve_height", num(k::nonuniform_4, prec) * pow(in.hEprime, seven_halves) / in.h_P}});
  r.second = make("nonuniform_image", BoundMeaning::IndexExceedingImpliesNewPrime,
                  {{"constant", num(k::nonuniform_image_1, prec)},
                   {"inverse_height", num(k::nonuniform_2, prec) / in.h_P},
                   {"height_power", num(k::nonuniform_image_3, prec) * pow(in.h_sigmaP, five_halves)},
                   {"curve_height", num(k::nonuniform_image_4, prec) * pow(in.hE, seven_halves) / in.h_sigmaP}});
  return r;
}

BigFloat szpiro_constant(const BigFloat& S) {
  long prec = prec_of(S);
  BigFloat v = pow(20 * S, 8) * pow(BigFloat(10, prec), 4 * S);
  return max(BigFloat(1, prec), v);
}

Theorem12Bounds theorem12_bounds(const BigFloat& C, const BigFloat& h_sigmaP) {
  if (C < 1) throw Error(ErrorCode::PreconditionViolated, "C must be at least 1");
  long prec = prec_of(C);
  Theorem12Bounds t;
  BigFloat l = log(70 * C);
  t.composite = make("thm12_composite", BoundMeaning::UpperBoundOnIndex,
                     {{"log_branch", 18 * C * l * l}, {"linear_branch", 490000 * C}});
  t.N1 = make("thm12_N1", BoundMeaning::UpperBoundOnIndex,
              {{"linear_branch", num(k::thm12_N1_a, prec) * C},
               {"height_branch", num(k::thm12_N1_b, prec) * pow(C, BigFloat(7, prec) / 2) *
                                     pow(h_sigmaP, BigFloat(5, prec) / 2)}});
  t.N3 = make("thm12_N3", BoundMeaning::UpperBoundOnIndex, {{"linear", 77 * C}});
  return t;
}

BoundReport bounded_component_bounds(const BigFloat& h_P, const BigFloat& hEprime) {
  require_positive(h_P, "h(P')");
  BigFloat r = sqrt(h_P);
  BigFloat first = 4 / r * log(2 / r);
  BigFloat second = 288 / r + 4 * sqrt(1 + (128 * hEprime + 135) / h_P);
  return make("bounded_component", BoundMeaning::IndexExceedingImpliesTwoNewPrimes,
              {{"log_branch", first}, {"sqrt_branch", second}});
}

BoundReport doubly_magnified_degree_bounds(const BigFloat& h_P, const BigFloat& hE0) {
  require_positive(h_P, "h(P')");
  BigFloat r = sqrt(h_P);
  BigFloat first = 2 / r * log(2 / r);
  BigFloat second = 144 / r + 2 * sqrt(1 + (128 * hE0 + 135) / h_P);
  BoundReport rep = make("doubly_magnified", BoundMeaning::UpperBoundOnIndex,
                         {{"log_branch", first}, {"sqrt_branch", second}});
  rep.value = rep.value * rep.value;
  return rep;
}

BigFloat magnified_siegel_bound(const BigFloat& hEprime, long deg_st) {
  if (deg_st < 1) throw Error(ErrorCode::PreconditionViolated, "degree must be positive");
  return 7 * hEprime + 8 + log(BigFloat(deg_st, prec_of(hEprime)));
}

BigFloat lll_gap_threshold(const BoundInputs& in) {
  require_positive(in.h_P, "h(P')");
  require_positive(in.h_sigmaP, "h(sigma P')");
  BigFloat inner = max(5 * in.hEprime / in.h_P, 9 * in.hE / in.h_sigmaP);
  BigFloat t = 2 / in.h_P + sqrt(3 + inner + 7 / in.h_P);
  return max(BigFloat(8, prec_of(in.h_P)), t);
}

GapReport gap_principle(long n1, long n2, long n3, const BoundInputs& in) {
  require_positive(in.h_P, "h(P')");
  require_positive(in.h_sigmaP, "h(sigma P')");
  long prec = prec_of(in.h_P);
  GapReport g;
  BigFloat inner = max(5 * in.hEprime / in.h_P, 9 * in.hE / in.h_sigmaP);
  g.threshold = 2 / in.h_P + sqrt(3 + inner + 7 / in.h_P);
  g.hypotheses_ok = true;
  if (!(n3 > n2 && n2 > n1 && n1 > 8)) {
    g.hypotheses_ok = false;
    g.detail = "need n3 > n2 > n1 > 8";
  } else if (std::gcd(n1, n2) != 1 || std::gcd(n1, n3) != 1 || std::gcd(n2, n3) != 1) {
    g.hypotheses_ok = false;
    g.detail = "indices are not pairwise coprime";
  } else if (!(BigFloat(n1, prec) > g.threshold)) {
    g.hypotheses_ok = false;
    g.detail = "n1 does not exceed the minimal gap threshold";
  }
  BigFloat l3 = log(BigFloat(n3, prec));
  g.bound_caseA = 2 / in.h_P + sqrt(2 + (2 * l3 + 52 * in.hE) / in.h_sigmaP + num(k::gap_a, prec) / in.h_P);
  g.bound_caseB = 2 / in.h_P + sqrt(1 + (l3 + 26 * in.hEprime + num(k::gap_b, prec)) / in.h_P);
  return g;
}

}  // namespace edslab
