#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "edslab/bigfloat.hpp"

namespace edslab {

// Univariate polynomial over Q, coefficients lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  Poly(std::initializer_list<long> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly x();
  // x - root
  static Poly linear(const mpq_class& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  mpq_class lead() const;
  bool is_integral() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  mpq_class operator()(const mpq_class& x) const;
  BigFloat operator()(const BigFloat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpq_class& s);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
  friend Poly operator*(const mpq_class& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned n) const;
  // Comma-separated coefficients, lowest degree first; "0" for the zero polynomial.
  std::string to_string() const;
  static Poly parse(const std::string& text);

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
// True when b divides a in Z[x] (both integral, quotient integral).
bool divides_in_zx(const Poly& b, const Poly& a);
bool divides(const Poly& b, const Poly& a);
// Monic gcd over Q.
Poly gcd(const Poly& a, const Poly& b);
// Monic squarefree kernel: product of the distinct monic irreducible factors.
Poly squarefree_part(const Poly& a);
mpq_class resultant(const Poly& a, const Poly& b);
// sum_i c_i num^i den^(total - i); requires total >= deg(p).
Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int total);
// Unique polynomial of degree < xs.size() through the points.
Poly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace edslab
