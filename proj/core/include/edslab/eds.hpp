#pragma once

#include <gmpxx.h>

#include <vector>

#include "edslab/bigfloat.hpp"
#include "edslab/curve.hpp"
#include "edslab/divpoly.hpp"

namespace edslab {

// [n]P = (A/B^2, C/B^3); all fields zero except is_infinity when [n]P = O.
struct EDSTerm {
  long n = 0;
  mpz_class A, B, C;
  bool is_infinity = false;
};

EDSTerm term(const Curve& E, const Point& P, long n);
// Terms 1..n_max, one point addition per step.
std::vector<EDSTerm> sequence(const Curve& E, const Point& P, long n_max);
// The points [1]P .. [n_max]P, shared by sequence() and the sieve.
std::vector<Point> multiples(const Curve& E, const Point& P, long n_max);
EDSTerm term_of(long n, const Point& Q);

struct ValuationTransfer {
  int v_BP = 0;
  int v_BsP = 0;
  bool ok = false;
};

// ord_p(B_P) <= ord_p(B_{sigma P}) <= ord_p(B_P) + ord_p(deg sigma) when p | B_P.
ValuationTransfer valuation_transfer_check(const Isogeny& sigma, const Point& P, const mpz_class& p);

// True when P reduces to a nonsingular point modulo every prime.
bool good_reduction_everywhere(const Curve& E, const Point& P);

struct LinkCheck {
  BigFloat lhs;       // log B_{sigma P}
  BigFloat middle;    // log(B_P^d |psi_sigma(P)|)
  BigFloat rhs_high;  // log B_{sigma P} + (3/2) d h(E')
  bool exact_case = false;
  bool ok = false;
};

LinkCheck division_poly_link_check(const Isogeny& sigma, const Point& P, long prec = kDefaultPrecision);

}  // namespace edslab
