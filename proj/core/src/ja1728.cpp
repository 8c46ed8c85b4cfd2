#include "edslab/ja1728.hpp"

#include "edslab/eds.hpp"
#include "edslab/error.hpp"
#include "edslab/heights.hpp"
#include "edslab/numtheory.hpp"
#include "edslab/sieve_thue.hpp"

namespace edslab {

namespace {

bool twelve_mod_16(const mpz_class& A) { return mpz_fdiv_ui(A.get_mpz_t(), 16) == 12; }

void require_on(const EAParams& ea, const Point& P) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "point at infinity");
  if (!on_curve(ea.curve, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
}

bool composite(const mpz_class& B) { return B > 1 && primality(B) == Primality::Composite; }

}  // namespace

const char* ea_class2_name(EAClass2 c) {
  switch (c) {
    case EAClass2::ThreeMod4: return "A=3 mod 4";
    case EAClass2::OneMod4: return "A=1 mod 4";
    case EAClass2::Ord2One: return "ord2(A)=1";
    case EAClass2::FourMod16: return "A=4 mod 16";
    case EAClass2::TwelveMod16: return "A=12 mod 16";
    case EAClass2::Ord2Three: return "ord2(A)=3";
  }
  return "?";
}

const char* ea_verdict_name(EAVerdict v) {
  switch (v) {
    case EAVerdict::CompositeProven: return "CompositeProven";
    case EAVerdict::OutsideRange: return "OutsideRange";
    case EAVerdict::NotComposite: return "NotComposite";
  }
  return "?";
}

EAParams ea_params(const mpz_class& A) {
  if (A < 1) throw Error(ErrorCode::InvalidA, "A must be positive");
  Factorization f = factor(A);
  if (!f.complete()) throw Error(ErrorCode::FactorizationIncomplete, "cannot factor A = " + A.get_str());
  for (const auto& [p, e] : f.factors)
    if (e >= 4) throw Error(ErrorCode::InvalidA, "ord_" + p.get_str() + "(A) = " + std::to_string(e));
  EAParams ea;
  ea.A = A;
  int v2 = valuation(A, mpz_class(2));
  unsigned long r16 = mpz_fdiv_ui(A.get_mpz_t(), 16);
  if (v2 == 0) ea.class2 = r16 % 4 == 3 ? EAClass2::ThreeMod4 : EAClass2::OneMod4;
  else if (v2 == 1) ea.class2 = EAClass2::Ord2One;
  else if (v2 == 2) ea.class2 = r16 == 4 ? EAClass2::FourMod16 : EAClass2::TwelveMod16;
  else ea.class2 = EAClass2::Ord2Three;
  ea.curve = curve_new(0, 0, 0, -A, 0);
  return ea;
}

std::string EAReduction::kodaira_string() const {
  ReductionInfo info;
  info.type = type;
  info.n = n;
  return info.kodaira_string();
}

std::vector<EAReduction> ea_reduction_table(const mpz_class& A) {
  EAParams ea = ea_params(A);
  std::vector<EAReduction> out;
  EAReduction two{2, Kodaira::II, 0};
  switch (ea.class2) {
    case EAClass2::ThreeMod4: two.type = Kodaira::II; break;
    case EAClass2::OneMod4:
    case EAClass2::Ord2One: two.type = Kodaira::III; break;
    case EAClass2::FourMod16: two = {2, Kodaira::Ins, 2}; break;
    case EAClass2::TwelveMod16: two = {2, Kodaira::Ins, 3}; break;
    case EAClass2::Ord2Three: two.type = Kodaira::IIIs; break;
  }
  out.push_back(two);
  static const Kodaira odd[] = {Kodaira::I0, Kodaira::III, Kodaira::I0s, Kodaira::IIIs};
  for (const auto& p : prime_divisors(A)) {
    if (p == 2) continue;
    out.push_back({p, odd[valuation(A, p)], 0});
  }
  return out;
}

EAHeightBound ea_height_lower_bound(const mpz_class& A, const Point& P, long prec) {
  EAParams ea = ea_params(A);
  require_on(ea, P);
  if (torsion_order(ea.curve, P) > 0) throw Error(ErrorCode::TorsionPoint, P.to_string());
  if (P.x < 0 || P.x * P.x < A) throw Error(ErrorCode::BoundedComponent, P.to_string());
  EAHeightBound r;
  r.height = canonical_height_value(ea.curve, P, prec);
  r.bound = log(BigFloat(mpz_class(2 * A), prec)) / (twelve_mod_16(A) ? 64 : 16);
  r.ok = r.height >= r.bound;
  return r;
}

EADifference ea_height_difference_check(const mpz_class& A, const Point& P, long prec) {
  EAParams ea = ea_params(A);
  require_on(ea, P);
  if (torsion_order(ea.curve, P) > 0) throw Error(ErrorCode::TorsionPoint, P.to_string());
  mpz_class a = P.A(), b = P.B();
  mpz_class b2 = b * b;
  EADifference r;
  BigFloat log2 = log(BigFloat(2, prec));
  r.difference = canonical_height_value(ea.curve, P, prec) - log_abs(mpz_class(a * a + A * b2 * b2), prec) / 4;
  r.lower = -log(BigFloat(A, prec)) / 4 - 3 * log2 / 8;
  r.upper = log2 / 12;
  r.ok = r.lower <= r.difference && r.difference <= r.upper;
  return r;
}

bool ea_double_good_reduction(const mpz_class& A, const Point& P) {
  EAParams ea = ea_params(A);
  require_on(ea, P);
  Point Q = point_add(ea.curve, P, P);
  if (Q.inf) return true;
  return good_reduction_everywhere(ea.curve, Q);
}

EACompositeReport ea_even_index_composite(const mpz_class& A, const Point& P, long n) {
  EAParams ea = ea_params(A);
  require_on(ea, P);
  if (torsion_order(ea.curve, P) > 0) throw Error(ErrorCode::TorsionPoint, P.to_string());
  EACompositeReport r;
  r.n = n;
  r.index = 2 * n;
  if (n < kEvenIndexThreshold) return r;
  Point kP = point_mul(ea.curve, n, P);
  Point twok = point_add(ea.curve, kP, kP);
  r.B = twok.B();
  mpz_class a = abs(kP.A()), b = kP.B();
  mpz_class b4 = b * b * b * b, a2 = a * a, AA = A * A;
  if (b > 1 && a > AA) r.criteria.push_back("B_kP > 1 and |A_kP| > A^2");
  if (b > 1 && A * b4 - a2 > 4 * AA) r.criteria.push_back("B_kP > 1 and A B_kP^4 - A_kP^2 > 4A^2");
  if (a > AA * A && a2 - A * b4 > 4 * AA) r.criteria.push_back("|A_kP| > A^3 and A_kP^2 - A B_kP^4 > 4A^2");
  r.verdict = composite(r.B) ? EAVerdict::CompositeProven : EAVerdict::NotComposite;
  return r;
}

long ea_odd_multiple_threshold(const mpz_class& A) { return twelve_mod_16(A) ? 8 : 4; }

EACompositeReport ea_odd_multiple_composite(const mpz_class& A, const Point& Pprime, long m, long n) {
  if (m % 2 == 0) throw Error(ErrorCode::EvenM, "m = " + std::to_string(m));
  if (m < 3) throw Error(ErrorCode::PreconditionViolated, "m must be at least 3");
  EAParams ea = ea_params(A);
  require_on(ea, Pprime);
  if (torsion_order(ea.curve, Pprime) > 0) throw Error(ErrorCode::TorsionPoint, Pprime.to_string());
  Point P = point_mul(ea.curve, m, Pprime);
  if (!(P.x < 0)) throw Error(ErrorCode::NotOnBoundedComponent, P.to_string());
  EACompositeReport r;
  r.n = n;
  r.index = n;
  if (n < ea_odd_multiple_threshold(A)) return r;
  Point nP = point_mul(ea.curve, n, P);
  Point nPp = point_mul(ea.curve, n, Pprime);
  r.B = nP.B();
  mpz_class Bp = nPp.B();
  if (n % 2 == 0) {
    r.criteria.push_back("even n: B_{nP} = B_{2(nm/2)P'}");
  } else {
    if (Bp > 1) r.criteria.push_back("B_{nP'} > 1");
    if (count_new_primes(r.B, Bp) != PrimeCount::Zero) r.criteria.push_back("B_{nP} has a prime not dividing B_{nP'}");
  }
  r.verdict = composite(r.B) ? EAVerdict::CompositeProven : EAVerdict::NotComposite;
  return r;
}

}  // namespace edslab
