#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "edslab/bigfloat.hpp"
#include "edslab/numtheory.hpp"

namespace edslab {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integral coefficients.
struct Curve {
  mpz_class a1, a2, a3, a4, a6;
  mpz_class b2, b4, b6, b8, c4, c6, disc;
  mpq_class j;

  bool standardized() const;
  std::array<mpq_class, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
  std::string to_string() const;
  friend bool operator==(const Curve& a, const Curve& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
  }
};

// Throws SingularCurve when the discriminant vanishes.
Curve curve_new(const mpz_class& a1, const mpz_class& a2, const mpz_class& a3,
                const mpz_class& a4, const mpz_class& a6);
Curve curve_from_string(const std::string& text);

struct Point {
  bool inf = true;
  mpq_class x, y;

  static Point infinity() { return {}; }
  static Point affine(const mpq_class& x, const mpq_class& y) { return {false, x, y}; }
  // x = A/B^2, y = C/B^3, B >= 1; requires an integral model.
  mpz_class A() const;
  mpz_class B() const;
  mpz_class C() const;
  std::string to_string() const;
  static Point parse(const std::string& text);
  friend bool operator==(const Point& p, const Point& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
};

bool on_curve(const Curve& E, const Point& P);
Point point_neg(const Curve& E, const Point& P);
Point point_add(const Curve& E, const Point& P, const Point& Q);
Point point_mul(const Curve& E, const mpz_class& n, const Point& P);
// Smallest n in [1, 12] with [n]P = O, or 0 (Mazur bound).
int torsion_order(const Curve& E, const Point& P);

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Transform {
  mpq_class u = 1, r = 0, s = 0, t = 0;
  static Transform identity() { return {}; }
  // Apply this, then `next` on the resulting model.
  Transform then(const Transform& next) const;
  Transform inverse() const;
  std::array<mpq_class, 5> apply(const std::array<mpq_class, 5>& a) const;
  Point apply(const Point& P) const;
};

Curve apply(const Transform& T, const Curve& E);

enum class Kodaira { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };

struct ReductionInfo {
  mpz_class p;
  Kodaira type = Kodaira::I0;
  int n = 0;                // subscript for In and In*
  int ord_disc = 0;         // ord_p of the minimal discriminant
  int conductor_exponent = 0;
  bool is_minimal = true;   // the input model is minimal at p
  std::string kodaira_string() const;
};

ReductionInfo tate_reduction(const Curve& E, const mpz_class& p);

struct MinimalModel {
  Curve curve;        // standardized minimal model
  Transform change;   // from the input model to `curve`
};

MinimalModel minimal_model(const Curve& E);
MinimalModel minimal_model(const std::array<mpq_class, 5>& a);
bool is_minimal(const Curve& E);
std::vector<mpz_class> bad_primes(const Curve& E);

struct ConductorReport {
  mpz_class conductor;
  BigFloat szpiro;
  std::vector<ReductionInfo> local;
};

// Requires a globally minimal model; throws NotMinimal or DegenerateSzpiro.
ConductorReport conductor_and_szpiro(const Curve& E, long prec = kDefaultPrecision);

}  // namespace edslab
