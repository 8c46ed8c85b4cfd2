#include "edslab/heights.hpp"

#include <numeric>

#include "edslab/error.hpp"

namespace edslab {

namespace {

void require_minimal(const Curve& E) {
  if (!is_minimal(E)) throw Error(ErrorCode::NotMinimal, E.to_string());
}

struct Complex {
  BigFloat re, im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, long k) { return {a.re / k, a.im / k}; }
Complex operator/(const Complex& a, const Complex& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat cabs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

Complex csqrt(const Complex& z) {
  long prec = z.re.precision();
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return {sqrt(z.re), BigFloat(prec)};
    return {BigFloat(prec), sqrt(-z.re)};
  }
  BigFloat r = cabs(z);
  BigFloat re = sqrt((r + z.re) / 2);
  BigFloat im = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) im = -im;
  return {re, im};
}

// Carlson's symmetric integral R_F by duplication.
Complex carlson_rf(Complex x, Complex y, Complex z, long prec) {
  BigFloat tol = pow(BigFloat(2, prec), -(prec / 6 + 2));
  for (int iter = 0; iter < 4 * prec; ++iter) {
    Complex sx = csqrt(x), sy = csqrt(y), sz = csqrt(z);
    Complex lambda = sx * sy + sx * sz + sy * sz;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    Complex A = (x + y + z) / 3;
    Complex one{BigFloat(1, prec), BigFloat(prec)};
    Complex X = one - x / A, Y = one - y / A;
    Complex Z = Complex{BigFloat(prec), BigFloat(prec)} - X - Y;
    if (max(max(cabs(X), cabs(Y)), cabs(Z)) < tol) {
      Complex E2 = X * Y - Z * Z;
      Complex E3 = X * Y * Z;
      Complex s = one - E2 / 10 + E3 / 14 + E2 * E2 / 24 - Complex{BigFloat(3, prec), BigFloat(prec)} * E2 * E3 / 44;
      return s / csqrt(A);
    }
  }
  throw Error(ErrorCode::DivergencePrecision, "R_F duplication did not converge");
}

// Largest real root of t^3 + a t + b and the remaining pair.
struct CubicRoots {
  BigFloat e1;
  Complex e2, e3;
  bool all_real = false;
};

CubicRoots short_roots(const mpz_class& a, const mpz_class& b, long prec) {
  BigFloat A(a, prec), B(b, prec);
  auto f = [&](const BigFloat& t) { return (t * t + A) * t + B; };
  BigFloat hi = max(abs(A), abs(B)) + 1;
  BigFloat lo = -hi;
  // Bracket the largest root on an interval where the cubic is increasing.
  if (A.sign() < 0) {
    BigFloat c = sqrt(-A / 3);
    if (f(c).sign() <= 0)
      lo = c;
    else
      hi = -c;
  }
  BigFloat width = abs(hi) + abs(lo) + 1;
  long steps = prec + static_cast<long>(mpfr_get_exp(width.raw())) + 4;
  for (long i = 0; i < steps; ++i) {
    BigFloat mid = (lo + hi) / 2;
    if (f(mid).sign() > 0)
      hi = mid;
    else
      lo = mid;
  }
  BigFloat t = (lo + hi) / 2;
  CubicRoots r;
  r.e1 = t;
  BigFloat disc = -3 * (t * t) - 4 * A;
  BigFloat half = -t / 2;
  if (disc.sign() >= 0) {
    BigFloat s = sqrt(disc) / 2;
    r.e2 = {half + s, BigFloat(prec)};
    r.e3 = {half - s, BigFloat(prec)};
    r.all_real = true;
  } else {
    BigFloat s = sqrt(-disc) / 2;
    r.e2 = {half, s};
    r.e3 = {half, -s};
  }
  return r;
}

int sign_of(const mpq_class& q) { return sgn(q); }

}  // namespace

BigFloat j_height(const Curve& E, long prec) {
  mpz_class n = abs(E.j.get_num()), d = E.j.get_den();
  if (n == 0) return BigFloat(prec);
  return log_abs(n > d ? n : d, prec);
}

BigFloat curve_height(const Curve& E, long prec) {
  require_minimal(E);
  return max(j_height(E, prec), log_abs(E.disc, prec)) / 12;
}

BigFloat naive_height(const Point& P, long prec) {
  if (P.inf) return BigFloat(prec);
  mpz_class A = abs(P.A()), B2 = P.B() * P.B();
  return log_abs(A > B2 ? A : B2, prec) / 2;
}

mpq_class local_height_coefficient(const Curve& E, const Point& P, const mpz_class& p) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "local height at O");
  if (!tate_reduction(E, p).is_minimal) throw Error(ErrorCode::NotMinimal, "at " + p.get_str());
  const mpq_class x = P.x, y = P.y;
  const int N = valuation(E.disc, p);
  const mpq_class a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4;
  int A = valuation(mpq_class(3 * x * x + 2 * a2 * x + a4 - a1 * y), p);
  int B = valuation(mpq_class(2 * y + a1 * x + a3), p);
  mpq_class lambda;
  if (A <= 0 || B <= 0) {
    int vx = valuation(x, p);
    lambda = vx < 0 ? mpq_class(-vx, 2) : mpq_class(0);
  } else if (!mpz_divisible_p(E.c4.get_mpz_t(), p.get_mpz_t())) {
    mpq_class M = std::min(mpq_class(B), mpq_class(N, 2));
    lambda = M * (M - N) / (2 * N);
  } else {
    mpq_class psi3 = (((3 * x + E.b2) * x + 3 * E.b4) * x + 3 * E.b6) * x + E.b8;
    int C = valuation(psi3, p);
    if (C >= 3 * B)
      lambda = mpq_class(-2 * B, 3);
    else
      lambda = mpq_class(-C, 8);
  }
  lambda.canonicalize();
  return lambda + mpq_class(N, 12);
}

BigFloat local_height_nonarch(const Curve& E, const Point& P, const mpz_class& p, long prec) {
  return BigFloat(local_height_coefficient(E, P, p), prec) * log_abs(p, prec);
}

BigFloat arch_canonical_height(const Curve& E, const Point& P, long prec) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "archimedean height at O");
  const long wp = prec + 32;
  // Shift x so that every real point has X = x - r0 >= 1.
  mpz_class bound = 0;
  for (const mpq_class& q : {mpq_class(E.b2, 4), mpq_class(E.b4, 2), mpq_class(E.b6, 4)}) {
    mpz_class c, num = abs(q.get_num());
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    if (c > bound) bound = c;
  }
  const mpz_class r = -(bound + 2);
  const mpz_class b2 = E.b2 + 12 * r;
  const mpz_class b4 = E.b4 + r * E.b2 + 6 * r * r;
  const mpz_class b6 = E.b6 + 2 * r * E.b4 + r * r * E.b2 + 4 * r * r * r;
  const mpz_class b8 = E.b8 + 3 * r * E.b6 + 3 * r * r * E.b4 + r * r * r * E.b2 + 3 * r * r * r * r;
  const mpq_class X = P.x - r;
  if (X < 1) throw std::logic_error("shifted x below 1");
  BigFloat B2(b2, wp), B4(b4, wp), B6(b6, wp), B8(b8, wp);
  BigFloat t = BigFloat(1, wp) / BigFloat(X, wp);
  BigFloat weight(1, wp), sum(wp);
  BigFloat eps = pow(BigFloat(2, wp), -prec);
  bool converged = false;
  for (long n = 0; n < 4 * prec; ++n) {
    BigFloat t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    BigFloat z = 1 - B4 * t2 - 2 * B6 * t3 - B8 * t4;
    BigFloat w = 4 * t + B2 * t2 + 2 * B4 * t3 + B6 * t4;
    if (z.sign() <= 0) throw Error(ErrorCode::DivergencePrecision, "series reached a 2-torsion point");
    BigFloat term = weight * log(z);
    sum += term;
    if (abs(term) < eps && weight < eps) {
      converged = true;
      break;
    }
    t = w / z;
    weight = weight / 4;
  }
  if (!converged) throw Error(ErrorCode::DivergencePrecision, "archimedean series did not converge");
  BigFloat out = log_abs(X, wp) / 2 + sum / 8 - log_abs(E.disc, wp) / 12;
  BigFloat rounded(prec);
  mpfr_set(rounded.raw(), out.raw(), MPFR_RNDN);
  return rounded;
}

namespace {

// Smallest k such that kP reduces to a nonsingular point at every bad prime.
long good_multiple(const Curve& E, const Point& P) {
  long k = 1;
  for (const auto& p : bad_primes(E)) {
    int cap = 4 + valuation(E.disc, p);
    Point Q = P;
    long j = 1;
    for (; j <= cap; ++j) {
      if (Q.inf || mpz_divisible_p(Q.B().get_mpz_t(), p.get_mpz_t())) break;
      if (ayad_criterion(E, Q, p) == Reduction::Nonsingular) break;
      Q = point_add(E, Q, P);
    }
    k = std::lcm(k, j);
  }
  return k;
}

}  // namespace

HeightReport canonical_height(const Curve& E, const Point& P, long prec) {
  require_minimal(E);
  if (!on_curve(E, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "canonical height at O");
  HeightReport r;
  r.naive_h = naive_height(P, prec);
  r.curve_h = curve_height(E, prec);
  r.canonical_h = BigFloat(prec);
  r.arch_canonical = BigFloat(prec);
  r.unfactored_local = BigFloat(prec);
  r.canonical_check = BigFloat(prec);
  if (torsion_order(E, P) > 0) {
    r.torsion = true;
    return r;
  }
  r.arch_canonical = arch_canonical_height(E, P, prec);
  BigFloat total = r.arch_canonical;
  mpz_class good = P.B();
  for (const auto& p : bad_primes(E)) {
    remove_factor(good, p);
    BigFloat v = local_height_nonarch(E, P, p, prec);
    total += v;
    r.local_canonical.emplace(p, v);
  }
  if (good > 1) {
    FactorBudget cheap;
    cheap.operations = 20000;
    cheap.trial_limit = 10000;
    Factorization f = factor(good, cheap);
    for (const auto& [p, e] : f.factors) {
      BigFloat v = e * log_abs(p, prec);
      total += v;
      r.local_canonical.emplace(p, v);
    }
    if (!f.complete()) {
      r.unfactored_local = log_abs(f.cofactor, prec);
      total += r.unfactored_local;
    }
  }
  r.canonical_h = total;
  r.check_multiple = good_multiple(E, P);
  Point Q = point_mul(E, r.check_multiple, P);
  BigFloat hq = arch_canonical_height(E, Q, prec) + log_abs(Q.B(), prec) + log_abs(E.disc, prec) / 12;
  r.canonical_check = hq / (r.check_multiple * r.check_multiple);
  return r;
}

BigFloat canonical_height_value(const Curve& E, const Point& P, long prec) {
  return canonical_height(E, P, prec).canonical_h;
}

ShortModel short_model(const Curve& E) { return {-27 * E.c4, -54 * E.c6}; }

Point to_short(const Curve& E, const Point& P) {
  if (P.inf) return P;
  mpq_class x = 36 * P.x + 3 * mpq_class(E.b2);
  mpq_class y = 108 * (2 * P.y + E.a1 * P.x + E.a3);
  return Point::affine(x, y);
}

BigFloat short_arch_height(const Curve& E, const Point& P, long prec) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "height at O");
  mpq_class x = abs(to_short(E, P).x);
  if (x <= 1) return BigFloat(prec);
  return log_abs(x, prec) / 2;
}

bool on_bounded_component(const Curve& E, const Point& P, long prec) {
  if (P.inf || E.disc < 0) return false;
  ShortModel s = short_model(E);
  CubicRoots roots = short_roots(s.a, s.b, prec + 32);
  BigFloat x(to_short(E, P).x, prec + 32);
  BigFloat slack = pow(BigFloat(2, prec + 32), -(prec / 2));
  return x < roots.e1 - slack;
}

EllipticLog elliptic_log_short(const mpz_class& a, const mpz_class& b, const Point& R, long prec) {
  if (R.inf) throw Error(ErrorCode::IdentityPoint, "elliptic log at O");
  const long wp = prec + 32;
  CubicRoots roots = short_roots(a, b, wp);
  BigFloat x(R.x, wp);
  BigFloat slack = pow(BigFloat(2, wp), -(prec / 2));
  if (roots.all_real && x < roots.e1 - slack)
    throw Error(ErrorCode::BoundedComponent, R.to_string());
  Complex e1{roots.e1, BigFloat(wp)};
  Complex X{x, BigFloat(wp)};
  Complex zero{BigFloat(wp), BigFloat(wp)};
  Complex rf = carlson_rf(X - e1, X - roots.e2, X - roots.e3, wp);
  Complex rt = carlson_rf(zero, e1 - roots.e2, e1 - roots.e3, wp);
  EllipticLog out;
  out.phi = BigFloat(prec);
  out.phi_T0 = BigFloat(prec);
  BigFloat phi = 2 * rf.re;
  if (sign_of(R.y) < 0) phi = -phi;
  mpfr_set(out.phi.raw(), phi.raw(), MPFR_RNDN);
  BigFloat t0 = 2 * rt.re;
  mpfr_set(out.phi_T0.raw(), t0.raw(), MPFR_RNDN);
  return out;
}

EllipticLog elliptic_log(const Curve& E, const Point& P, long prec) {
  ShortModel s = short_model(E);
  return elliptic_log_short(s.a, s.b, to_short(E, P), prec);
}

PeriodShift period_shift(const BigFloat& phi_nP, long n, const BigFloat& phi_P, const BigFloat& phi_T0) {
  BigFloat diff = phi_nP - n * phi_P;
  BigFloat q = round(diff / (2 * phi_T0));
  PeriodShift s;
  s.m = to_mpz(q);
  s.residual = abs(diff - 2 * q * phi_T0);
  return s;
}

BigFloat isogeny_height_identity_check(const Isogeny& sigma, const Point& P, long prec) {
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "identity check at O");
  mpq_class psq = sigma.psi_sq(P.x);
  if (psq == 0) throw Error(ErrorCode::KernelPoint, P.to_string());
  const long wp = prec + 16;
  Point Q = sigma.apply(P);
  BigFloat lhs = log_abs(psq, wp) / 2;
  BigFloat rhs = sigma.degree * arch_canonical_height(sigma.domain, P, wp) - arch_canonical_height(sigma.codomain, Q, wp) +
                 (sigma.degree * log_abs(sigma.domain.disc, wp) - log_abs(sigma.codomain.disc, wp)) / 12;
  return abs(lhs - rhs);
}

BoundCheck bounded_component_height_bound(const Curve& E, const Point& Q, long prec) {
  if (Q.inf || !on_bounded_component(E, Q, prec))
    throw Error(ErrorCode::UnboundedComponent, Q.to_string());
  BoundCheck c;
  c.value = arch_canonical_height(E, Q, prec);
  c.bound = 3 * curve_height(E, prec) + log(BigFloat(6, prec)) + BigFloat::from_string("1.07", prec);
  c.ok = c.value <= c.bound;
  return c;
}

PellarinCheck pellarin_check(const Isogeny& sigma, long prec) {
  PellarinCheck c;
  c.lhs = curve_height(sigma.domain, prec);
  BigFloat hE = curve_height(sigma.codomain, prec);
  c.alpha = j_height(sigma.codomain, prec) > 4 ? 5 : 16;
  c.rhs = c.alpha * hE + log(BigFloat(sigma.degree, prec)) + BigFloat::from_string("15.8", prec);
  c.ok = c.lhs <= c.rhs;
  return c;
}

}  // namespace edslab
