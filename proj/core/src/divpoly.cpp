#include "edslab/divpoly.hpp"

#include <numeric>

#include "edslab/error.hpp"

namespace edslab {

Poly psi2_sq(const Curve& E) {
  return Poly(std::vector<mpq_class>{E.b6, 2 * E.b4, E.b2, 4});
}

DivisionPolynomials::DivisionPolynomials(const Curve& E) : E_(E), F_(psi2_sq(E)) {
  const mpq_class b2 = E.b2, b4 = E.b4, b6 = E.b6, b8 = E.b8;
  f_.push_back(Poly());
  f_.push_back(Poly::constant(1));
  f_.push_back(Poly::constant(1));
  f_.push_back(Poly(std::vector<mpq_class>{b8, 3 * b6, 3 * b4, b2, 3}));
  f_.push_back(Poly(std::vector<mpq_class>{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2}));
}

const Poly& DivisionPolynomials::f(int n) {
  while (static_cast<int>(f_.size()) <= n) {
    int k = static_cast<int>(f_.size());
    int m = k / 2;
    Poly next;
    if (k % 2) {
      // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
      Poly a = f_[m + 2] * f_[m].pow(3);
      Poly b = f_[m - 1] * f_[m + 1].pow(3);
      Poly F2 = F_ * F_;
      next = (m % 2 == 0) ? F2 * a - b : a - F2 * b;
    } else {
      // psi_{2m} psi_2 = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
      next = f_[m] * (f_[m + 2] * f_[m - 1].pow(2) - f_[m - 2] * f_[m + 1].pow(2));
    }
    f_.push_back(std::move(next));
  }
  return f_[n];
}

Poly DivisionPolynomials::psi_sq(int n) {
  const Poly& fn = f(n);
  Poly sq = fn * fn;
  return n % 2 ? sq : sq * F_;
}

Poly DivisionPolynomials::phi(int n) {
  if (n == 0) return Poly::constant(1);
  f(n + 1);
  Poly prod = f_[n + 1] * f_[n - 1];
  if (n % 2) prod = prod * F_;
  return Poly::x() * psi_sq(n) - prod;
}

Poly psi_sq(const Curve& E, int n) { return DivisionPolynomials(E).psi_sq(n); }
Poly phi(const Curve& E, int n) { return DivisionPolynomials(E).phi(n); }

std::vector<mpq_class> psi_values(const Curve& E, const Point& P, int n) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "division polynomial at O");
  const mpq_class x = P.x;
  const mpq_class psi2 = 2 * P.y + mpq_class(E.a1) * x + mpq_class(E.a3);
  const mpq_class F = psi2 * psi2;
  const mpq_class b2 = E.b2, b4 = E.b4, b6 = E.b6, b8 = E.b8;
  std::vector<mpq_class> f(std::max(n + 3, 5));
  f[0] = 0;
  f[1] = 1;
  f[2] = 1;
  f[3] = (((3 * x + b2) * x + 3 * b4) * x + 3 * b6) * x + b8;
  f[4] = (((((2 * x + b2) * x + 5 * b4) * x + 10 * b6) * x + 10 * b8) * x + b2 * b8 - b4 * b6) * x + b4 * b8 - b6 * b6;
  for (int k = 5; k <= n; ++k) {
    int m = k / 2;
    if (k % 2) {
      mpq_class a = f[m + 2] * f[m] * f[m] * f[m];
      mpq_class b = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
      f[k] = (m % 2 == 0) ? mpq_class(F * F * a - b) : mpq_class(a - F * F * b);
    } else {
      f[k] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  std::vector<mpq_class> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = (k % 2) ? f[k] : mpq_class(psi2 * f[k]);
  return out;
}

mpq_class psi_value(const Curve& E, const Point& P, int n) { return psi_values(E, P, n)[n]; }

mpq_class phi_value(const Curve& E, const Point& P, int n) {
  auto v = psi_values(E, P, n + 1);
  if (n == 0) return 1;
  return P.x * v[n] * v[n] - v[n + 1] * v[n - 1];
}

namespace {

// sum over roots a of D of g(a) / (x - a), as a numerator over D.
Poly partial_fraction_numerator(const Poly& g, const Poly& D) {
  if (D.degree() <= 0) return Poly();
  return divmod(g * D.derivative(), D).remainder;
}

// sum over roots of D of g.
mpq_class root_trace(const Poly& g, const Poly& D) {
  if (D.degree() <= 0) return 0;
  return partial_fraction_numerator(g, D).coeff(D.degree() - 1);
}

// F_v(X) X'^0 identity for x-maps of normalized isogenies:
// F_cod(N/Q) Q^4 = (N'Q - NQ')^2 F_dom.
bool differential_identity(const Curve& dom, const std::array<mpq_class, 5>& cod, const Poly& N, const Poly& Q) {
  const mpq_class &A1 = cod[0], &A2 = cod[1], &A3 = cod[2], &A4 = cod[3], &A6 = cod[4];
  mpq_class B2 = A1 * A1 + 4 * A2, B4 = 2 * A4 + A1 * A3, B6 = A3 * A3 + 4 * A6;
  Poly Fcod(std::vector<mpq_class>{B6, 2 * B4, B2, 4});
  Poly lhs = homogenize(Fcod, N, Q, 3) * Q;
  Poly w = N.derivative() * Q - N * Q.derivative();
  Poly rhs = w * w * psi2_sq(dom);
  return lhs == rhs;
}

}  // namespace

Point Isogeny::apply(const Point& P) const {
  if (P.inf) return P;
  mpq_class den = psi_sq(P.x);
  if (den == 0) return Point::infinity();
  mpq_class X = phi(P.x) / den;
  // 2Y + A1 X + A3 = X'(x) (2y + a1 x + a3) / d_sigma
  mpq_class dX = (phi.derivative()(P.x) * den - phi(P.x) * psi_sq.derivative()(P.x)) / (den * den);
  mpq_class w = dX * (2 * P.y + mpq_class(domain.a1) * P.x + mpq_class(domain.a3)) / mpq_class(d_sigma);
  mpq_class Y = (w - mpq_class(codomain.a1) * X - mpq_class(codomain.a3)) / 2;
  Point out = Point::affine(X, Y);
  if (!on_curve(codomain, out)) throw std::logic_error("isogeny image not on codomain");
  return out;
}

Isogeny velu(const Curve& E, const Poly& kernel_in) {
  if (kernel_in.is_zero()) throw Error(ErrorCode::InvalidKernel, "zero kernel polynomial");
  Poly D = squarefree_part(kernel_in);
  Poly F = psi2_sq(E);
  Poly D2 = gcd(D, F);
  Poly Dodd = divmod(D, D2).quotient.monic();
  long degree = 1 + D2.degree() + 2L * Dodd.degree();
  if (degree > 1) {
    Poly psid = psi_sq(E, static_cast<int>(degree));
    if (!divides(D, psid))
      throw Error(ErrorCode::InvalidKernel, "kernel roots are not " + std::to_string(degree) + "-torsion");
  }
  Poly Fp = F.derivative();
  mpq_class quarter(1, 4), half(1, 2);
  Poly v2 = Fp * quarter, vodd = Fp * half;
  mpq_class v = root_trace(v2, D2) + root_trace(vodd, Dodd);
  mpq_class w = root_trace(Poly::x() * v2, D2) + root_trace(F + Poly::x() * vodd, Dodd);
  std::array<mpq_class, 5> a = E.ainvs();
  std::array<mpq_class, 5> A = {a[0], a[1], a[2], a[3] - 5 * v, a[4] - mpq_class(E.b2) * v - 7 * w};

  Poly R1 = partial_fraction_numerator(v2, D2);
  Poly R2 = partial_fraction_numerator(vodd, Dodd);
  Poly R3 = partial_fraction_numerator(F, Dodd);
  Poly Dodd2 = Dodd * Dodd;
  Poly Q = D2 * Dodd2;
  Poly N = Poly::x() * Q + R1 * Dodd2 + R2 * D2 * Dodd - (R3.derivative() * Dodd - R3 * Dodd.derivative()) * D2;
  if (!differential_identity(E, A, N, Q))
    throw Error(ErrorCode::InvalidKernel, "kernel polynomial does not define a subgroup");

  MinimalModel mm = minimal_model(A);
  const Transform& T = mm.change;
  Isogeny out;
  out.domain = E;
  out.codomain = mm.curve;
  out.degree = degree;
  out.kernel_poly = D;
  mpq_class u = abs(T.u);
  if (u.get_den() != 1) throw std::logic_error("non-integral d_sigma");
  out.d_sigma = u.get_num();
  out.psi_sq = Q * mpq_class(u * u);
  out.phi = N - Q * T.r;
  if (!out.psi_sq.is_integral() || !out.phi.is_integral())
    throw std::logic_error("division polynomials of the isogeny are not integral");
  return out;
}

Isogeny multiplication(const Curve& E, long m) {
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "multiplier must be positive");
  DivisionPolynomials dp(E);
  Isogeny out;
  out.domain = E;
  out.codomain = E;
  out.degree = m * m;
  out.psi_sq = dp.psi_sq(static_cast<int>(m));
  out.phi = dp.phi(static_cast<int>(m));
  out.kernel_poly = squarefree_part(out.psi_sq);
  out.d_sigma = m;
  return out;
}

Isogeny identity_isogeny(const Curve& E) { return multiplication(E, 1); }

Poly image_kernel(const Isogeny& sigma, const Poly& g_in) {
  // Res_t(g(t), X psi^2(t) - phi(t)) as a polynomial in X, by interpolation.
  Poly g = squarefree_part(g_in);
  g = divmod(g, gcd(g, sigma.psi_sq)).quotient.monic();
  if (g.degree() <= 0) return Poly::constant(1);
  int deg = g.degree();
  std::vector<mpq_class> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    mpq_class X = i;
    xs.push_back(X);
    ys.push_back(resultant(g, sigma.psi_sq * X - sigma.phi));
  }
  return squarefree_part(interpolate(xs, ys));
}

Isogeny dual(const Isogeny& sigma) {
  Poly torsion = squarefree_part(psi_sq(sigma.domain, static_cast<int>(sigma.degree)));
  return velu(sigma.codomain, image_kernel(sigma, torsion));
}

Isogeny composite(const Isogeny& sigma, const Isogeny& tau) {
  if (!(sigma.codomain == tau.domain))
    throw Error(ErrorCode::DomainMismatch, "codomain of sigma differs from domain of tau");
  int k = tau.kernel_poly.degree();
  Poly pre = homogenize(tau.kernel_poly, sigma.phi, sigma.psi_sq, k);
  Poly kernel = squarefree_part(sigma.kernel_poly * pre);
  return velu(sigma.domain, kernel);
}

ChainRuleReport compose_check(const Isogeny& sigma, const Isogeny& tau) {
  ChainRuleReport rep;
  rep.composite = composite(sigma, tau);
  if (!(rep.composite.codomain == tau.codomain)) return rep;
  int dt = static_cast<int>(tau.degree);
  rep.phi_identity = homogenize(tau.phi, sigma.phi, sigma.psi_sq, dt) == rep.composite.phi;
  rep.psi_identity = sigma.psi_sq * homogenize(tau.psi_sq, sigma.phi, sigma.psi_sq, dt - 1) == rep.composite.psi_sq;
  return rep;
}

Reduction ayad_criterion(const Curve& E, const Point& P, const mpz_class& p) {
  if (P.inf) throw Error(ErrorCode::ReducesToIdentity, "point at infinity");
  if (mpz_divisible_p(P.B().get_mpz_t(), p.get_mpz_t()))
    throw Error(ErrorCode::ReducesToIdentity, "p divides B_P");
  auto red = [&](const mpq_class& q) {
    mpz_class inv, r;
    mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
    r = q.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  mpz_class x = red(P.x), y = red(P.y);
  mpz_class fx = E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4;
  mpz_class fy = 2 * y + E.a1 * x + E.a3;
  bool singular = mpz_divisible_p(fx.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(fy.get_mpz_t(), p.get_mpz_t());
  return singular ? Reduction::Singular : Reduction::Nonsingular;
}

bool ayad_divpoly_test(const Curve& E, const Point& P, const mpz_class& p, int m) {
  mpq_class psi = psi_value(E, P, m);
  mpq_class ph = phi_value(E, P, m);
  return valuation(psi, p) > 0 && valuation(ph, p) > 0;
}

PullbackReport pullback_kernel(const Isogeny& sigma, const Isogeny& tau) {
  if (std::gcd(sigma.degree, tau.degree) != 1)
    throw Error(ErrorCode::NonCoprimeDegrees, "degrees " + std::to_string(sigma.degree) + " and " + std::to_string(tau.degree));
  if (!(sigma.codomain == tau.domain))
    throw Error(ErrorCode::DomainMismatch, "tau must start on the codomain of sigma");
  PullbackReport rep;
  int k = tau.kernel_poly.degree();
  Poly pre = homogenize(tau.kernel_poly, sigma.phi, sigma.psi_sq, k);
  Poly torsion = psi_sq(sigma.domain, static_cast<int>(tau.degree));
  Poly kernel = tau.degree == 1 ? Poly::constant(1) : squarefree_part(gcd(pre, torsion));
  rep.tau_sigma = velu(sigma.domain, kernel);
  rep.tau_after_sigma = composite(sigma, tau);
  rep.divides = divides_in_zx(sigma.psi_sq * rep.tau_sigma.psi_sq, rep.tau_after_sigma.psi_sq);
  return rep;
}

}  // namespace edslab
