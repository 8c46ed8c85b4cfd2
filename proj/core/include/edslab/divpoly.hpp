#pragma once

#include <gmpxx.h>

#include <vector>

#include "edslab/curve.hpp"
#include "edslab/poly.hpp"

namespace edslab {

// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
Poly psi2_sq(const Curve& E);

// The x-parts f_n of the division polynomials: psi_n = f_n for odd n and
// psi_n = psi_2 f_n for even n.
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const Curve& E);
  const Poly& f(int n);
  Poly psi_sq(int n);
  Poly phi(int n);

 private:
  Curve E_;
  Poly F_;
  std::vector<Poly> f_;
};

Poly psi_sq(const Curve& E, int n);
Poly phi(const Curve& E, int n);

// psi_n(P) and phi_n(P) as exact rationals; psi_n uses y for even n.
mpq_class psi_value(const Curve& E, const Point& P, int n);
mpq_class phi_value(const Curve& E, const Point& P, int n);
// psi_1(P) .. psi_n(P), index 0 holds psi_0 = 0.
std::vector<mpq_class> psi_values(const Curve& E, const Point& P, int n);

struct Isogeny {
  Curve domain;
  Curve codomain;
  long degree = 1;
  Poly kernel_poly;   // monic, one root per +-pair of nonzero kernel points
  mpz_class d_sigma;  // sigma^* omega_codomain = d_sigma omega_domain, taken positive
  Poly psi_sq;        // d_sigma^2 prod_{T != O} (x - x(T))
  Poly phi;           // x o sigma = phi / psi_sq

  Point apply(const Point& P) const;
};

// Kernel given by its x-polynomial; repeated roots are collapsed, so the
// full product prod_{T != O}(x - x(T)) is also accepted.
Isogeny velu(const Curve& E, const Poly& kernel_poly);
// [m] on E, codomain E itself.
Isogeny multiplication(const Curve& E, long m);
Isogeny identity_isogeny(const Curve& E);
// Kernel x-polynomial of sigma(S) where S is given by the x-polynomial g.
Poly image_kernel(const Isogeny& sigma, const Poly& g);
Isogeny dual(const Isogeny& sigma);
// Isogeny with kernel sigma^{-1}(ker tau), i.e. tau o sigma.
Isogeny composite(const Isogeny& sigma, const Isogeny& tau);

struct ChainRuleReport {
  bool phi_identity = false;
  bool psi_identity = false;
  Isogeny composite;
  bool ok() const { return phi_identity && psi_identity; }
};

// Both chain-rule identities for tau o sigma; throws DomainMismatch.
ChainRuleReport compose_check(const Isogeny& sigma, const Isogeny& tau);

enum class Reduction { Singular, Nonsingular };

Reduction ayad_criterion(const Curve& E, const Point& P, const mpz_class& p);
// ord_p psi_m(P) > 0 and ord_p phi_m(P) > 0.
bool ayad_divpoly_test(const Curve& E, const Point& P, const mpz_class& p, int m);

struct PullbackReport {
  Isogeny tau_sigma;  // kernel is the image of ker(tau) under the dual of sigma
  Isogeny tau_after_sigma;
  bool divides = false;  // psi_sigma^2 psi_{tau_sigma}^2 | psi_{tau o sigma}^2 in Z[x]
};

// sigma: E' -> E, tau with domain E; degrees coprime.
PullbackReport pullback_kernel(const Isogeny& sigma, const Isogeny& tau);

}  // namespace edslab
