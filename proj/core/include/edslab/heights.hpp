#pragma once

#include <gmpxx.h>

#include <map>

#include "edslab/bigfloat.hpp"
#include "edslab/curve.hpp"
#include "edslab/divpoly.hpp"

namespace edslab {

// (1/12) max(h(j), log|disc|); requires a minimal model.
BigFloat curve_height(const Curve& E, long prec = kDefaultPrecision);
// Logarithmic height of the rational j-invariant.
BigFloat j_height(const Curve& E, long prec = kDefaultPrecision);
// (1/2) log max(|A_P|, B_P^2).
BigFloat naive_height(const Point& P, long prec = kDefaultPrecision);

// Local height at p as a rational multiple of log p; includes ord_p(disc)/12.
mpq_class local_height_coefficient(const Curve& E, const Point& P, const mpz_class& p);
BigFloat local_height_nonarch(const Curve& E, const Point& P, const mpz_class& p, long prec = kDefaultPrecision);
// Archimedean local height, normalized so that it tends to
// log|psi_n(P)|/n^2 - log|disc|/12.
BigFloat arch_canonical_height(const Curve& E, const Point& P, long prec = kDefaultPrecision);

struct HeightReport {
  BigFloat naive_h;
  BigFloat canonical_h;
  BigFloat arch_canonical;
  std::map<mpz_class, BigFloat> local_canonical;  // bad primes and primes of B_P
  BigFloat unfactored_local;                      // good primes of B_P left unfactored
  BigFloat curve_h;
  bool torsion = false;
  // Independent value from a multiple kP with good reduction everywhere.
  BigFloat canonical_check;
  long check_multiple = 1;
};

HeightReport canonical_height(const Curve& E, const Point& P, long prec = kDefaultPrecision);
BigFloat canonical_height_value(const Curve& E, const Point& P, long prec = kDefaultPrecision);

// y~^2 = x~^3 + a x~ + b with x~ = 36x + 3b2, y~ = 108(2y + a1 x + a3); disc = 6^12 disc(E).
struct ShortModel {
  mpz_class a, b;
};
ShortModel short_model(const Curve& E);
Point to_short(const Curve& E, const Point& P);
// (1/2) log max(1, |x~(P)|) on the short model.
BigFloat short_arch_height(const Curve& E, const Point& P, long prec = kDefaultPrecision);

bool on_bounded_component(const Curve& E, const Point& P, long prec = kDefaultPrecision);

struct EllipticLog {
  BigFloat phi;     // Sign(y~) times the integral of dt/sqrt(t^3 + a t + b) from x~ to infinity
  BigFloat phi_T0;  // same for the 2-torsion point with largest x~
};

EllipticLog elliptic_log_short(const mpz_class& a, const mpz_class& b, const Point& R, long prec = kDefaultPrecision);
// Maps P to the short model first; throws BoundedComponent.
EllipticLog elliptic_log(const Curve& E, const Point& P, long prec = kDefaultPrecision);

struct PeriodShift {
  mpz_class m;        // phi(nP) = n phi(P) + 2 m phi(T0)
  BigFloat residual;
};
PeriodShift period_shift(const BigFloat& phi_nP, long n, const BigFloat& phi_P, const BigFloat& phi_T0);

// |log|psi_sigma(P)| - (d h_inf(P) - h_inf(sigma P) + (d log|disc'| - log|disc|)/12)|.
BigFloat isogeny_height_identity_check(const Isogeny& sigma, const Point& P, long prec = kDefaultPrecision);

struct BoundCheck {
  BigFloat value;
  BigFloat bound;
  bool ok = false;
};

// h_inf(Q) <= 3h(E) + log 6 + 1.07 for Q on the bounded component.
BoundCheck bounded_component_height_bound(const Curve& E, const Point& Q, long prec = kDefaultPrecision);

struct PellarinCheck {
  BigFloat lhs;  // h(domain)
  BigFloat rhs;  // alpha h(codomain) + log deg + 15.8
  int alpha = 16;
  bool ok = false;
};

PellarinCheck pellarin_check(const Isogeny& sigma, long prec = kDefaultPrecision);

}  // namespace edslab
