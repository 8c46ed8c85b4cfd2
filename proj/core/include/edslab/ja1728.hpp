#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "edslab/bigfloat.hpp"
#include "edslab/curve.hpp"

namespace edslab {

// Residue class of A at 2.
enum class EAClass2 { ThreeMod4, OneMod4, Ord2One, FourMod16, TwelveMod16, Ord2Three };
const char* ea_class2_name(EAClass2 c);

// y^2 = x(x^2 - A), A >= 1 with ord_p(A) <= 3 for every p.
struct EAParams {
  mpz_class A;
  EAClass2 class2 = EAClass2::OneMod4;
  Curve curve;
};

// Throws InvalidA.
EAParams ea_params(const mpz_class& A);

struct EAReduction {
  mpz_class p;
  Kodaira type = Kodaira::I0;
  int n = 0;
  std::string kodaira_string() const;
};

// Predicted types at 2 and at every odd prime dividing A.
std::vector<EAReduction> ea_reduction_table(const mpz_class& A);

struct EAHeightBound {
  BigFloat height;
  BigFloat bound;  // log(2A)/16, or log(2A)/64 when A = 12 mod 16
  bool ok = false;
};

// Throws BoundedComponent or TorsionPoint.
EAHeightBound ea_height_lower_bound(const mpz_class& A, const Point& P, long prec = kDefaultPrecision);

struct EADifference {
  BigFloat difference;  // h(P) - log|A_P^2 + A B_P^4| / 4
  BigFloat lower, upper;
  bool ok = false;
};

EADifference ea_height_difference_check(const mpz_class& A, const Point& P, long prec = kDefaultPrecision);

// [2]P reduces to a nonsingular point modulo every prime.
bool ea_double_good_reduction(const mpz_class& A, const Point& P);

enum class EAVerdict { CompositeProven, OutsideRange, NotComposite };
const char* ea_verdict_name(EAVerdict v);

struct EACompositeReport {
  long n = 0;
  long index = 0;  // the term actually tested
  EAVerdict verdict = EAVerdict::OutsideRange;
  mpz_class B;
  std::vector<std::string> criteria;  // sufficient conditions that fired
};

inline constexpr long kEvenIndexThreshold = 10;

// B_{2nP}; criteria evaluated at kP with k = n.
EACompositeReport ea_even_index_composite(const mpz_class& A, const Point& P, long n);

// P = [m]P' must lie on the bounded component; tests B_{nP}. Throws EvenM,
// NotOnBoundedComponent.
EACompositeReport ea_odd_multiple_composite(const mpz_class& A, const Point& Pprime, long m, long n);
long ea_odd_multiple_threshold(const mpz_class& A);

}  // namespace edslab
