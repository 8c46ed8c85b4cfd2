#include "edslab/curve.hpp"

#include <sstream>

#include "edslab/error.hpp"

namespace edslab {

namespace {

void fill_invariants(Curve& E) {
  const mpz_class &a1 = E.a1, &a2 = E.a2, &a3 = E.a3, &a4 = E.a4, &a6 = E.a6;
  E.b2 = a1 * a1 + 4 * a2;
  E.b4 = 2 * a4 + a1 * a3;
  E.b6 = a3 * a3 + 4 * a6;
  E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4 = E.b2 * E.b2 - 24 * E.b4;
  E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
  E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
  if (E.disc != 0) {
    E.j = mpq_class(E.c4 * E.c4 * E.c4, E.disc);
    E.j.canonicalize();
  }
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  std::string t = trim(text);
  if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), mod(a, m).get_mpz_t(), m.get_mpz_t()))
    throw std::logic_error("no inverse");
  return r;
}

}  // namespace

bool Curve::standardized() const {
  return (a1 == 0 || a1 == 1) && (a3 == 0 || a3 == 1) && a2 >= -1 && a2 <= 1;
}

std::string Curve::to_string() const {
  std::ostringstream os;
  os << '[' << a1.get_str() << ',' << a2.get_str() << ',' << a3.get_str() << ',' << a4.get_str()
     << ',' << a6.get_str() << ']';
  return os.str();
}

Curve curve_new(const mpz_class& a1, const mpz_class& a2, const mpz_class& a3,
                const mpz_class& a4, const mpz_class& a6) {
  Curve E;
  E.a1 = a1;
  E.a2 = a2;
  E.a3 = a3;
  E.a4 = a4;
  E.a6 = a6;
  fill_invariants(E);
  if (E.disc == 0) throw Error(ErrorCode::SingularCurve, "discriminant is zero for " + E.to_string());
  return E;
}

Curve curve_from_string(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error(ErrorCode::ParseError, "curve must look like [a1,a2,a3,a4,a6]");
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  std::vector<mpz_class> a;
  while (std::getline(ss, item, ',')) {
    mpz_class z;
    if (z.set_str(trim(item), 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
    a.push_back(z);
  }
  if (a.size() != 5) throw Error(ErrorCode::ParseError, "curve needs five coefficients");
  return curve_new(a[0], a[1], a[2], a[3], a[4]);
}

mpz_class Point::B() const {
  if (inf) throw Error(ErrorCode::IdentityPoint, "point at infinity has no B");
  mpz_class b;
  if (!mpz_perfect_square_p(x.get_den_mpz_t()))
    throw Error(ErrorCode::PointNotOnCurve, "denominator of x is not a square");
  mpz_sqrt(b.get_mpz_t(), x.get_den_mpz_t());
  return b;
}

mpz_class Point::A() const {
  B();
  return x.get_num();
}

mpz_class Point::C() const {
  mpz_class b = B();
  mpq_class c = y * mpq_class(b * b * b);
  if (c.get_den() != 1) throw Error(ErrorCode::PointNotOnCurve, "y denominator is not B^3");
  return c.get_num();
}

std::string Point::to_string() const {
  if (inf) return "inf";
  return x.get_str() + "," + y.get_str();
}

Point Point::parse(const std::string& text) {
  std::string t = trim(text);
  if (t == "inf") return Point::infinity();
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  size_t comma = t.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "point must be 'inf' or 'x,y'");
  return Point::affine(parse_rational(t.substr(0, comma)), parse_rational(t.substr(comma + 1)));
}

bool on_curve(const Curve& E, const Point& P) {
  if (P.inf) return true;
  const mpq_class &x = P.x, &y = P.y;
  mpq_class lhs = y * y + mpq_class(E.a1) * x * y + mpq_class(E.a3) * y;
  mpq_class rhs = x * x * x + mpq_class(E.a2) * x * x + mpq_class(E.a4) * x + mpq_class(E.a6);
  return lhs == rhs;
}

Point point_neg(const Curve& E, const Point& P) {
  if (P.inf) return P;
  return Point::affine(P.x, -P.y - mpq_class(E.a1) * P.x - mpq_class(E.a3));
}

namespace {

Point add_unchecked(const Curve& E, const Point& P, const Point& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  mpq_class a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4, a6 = E.a6;
  mpq_class lambda, nu;
  if (P.x == Q.x) {
    if (P.y + Q.y + a1 * Q.x + a3 == 0) return Point::infinity();
    mpq_class den = 2 * P.y + a1 * P.x + a3;
    lambda = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / den;
    nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / den;
  } else {
    mpq_class dx = Q.x - P.x;
    lambda = (Q.y - P.y) / dx;
    nu = (P.y * Q.x - Q.y * P.x) / dx;
  }
  mpq_class x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
  mpq_class y3 = -(lambda + a1) * x3 - nu - a3;
  return Point::affine(x3, y3);
}

void require_on_curve(const Curve& E, const Point& P) {
  if (!on_curve(E, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string() + " not on " + E.to_string());
}

}  // namespace

Point point_add(const Curve& E, const Point& P, const Point& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  return add_unchecked(E, P, Q);
}

Point point_mul(const Curve& E, const mpz_class& n, const Point& P) {
  require_on_curve(E, P);
  if (n == 0 || P.inf) return Point::infinity();
  Point base = n < 0 ? point_neg(E, P) : P;
  mpz_class k = abs(n);
  // Left-to-right signed binary (non-adjacent form).
  std::vector<int> naf;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) {
      int digit = 2 - static_cast<int>(mpz_fdiv_ui(k.get_mpz_t(), 4));
      naf.push_back(digit);
      k -= digit;
    } else {
      naf.push_back(0);
    }
    k >>= 1;
  }
  Point neg = point_neg(E, base);
  Point acc = Point::infinity();
  for (auto it = naf.rbegin(); it != naf.rend(); ++it) {
    acc = add_unchecked(E, acc, acc);
    if (*it == 1) acc = add_unchecked(E, acc, base);
    if (*it == -1) acc = add_unchecked(E, acc, neg);
  }
  return acc;
}

int torsion_order(const Curve& E, const Point& P) {
  require_on_curve(E, P);
  Point acc = P;
  for (int n = 1; n <= 12; ++n) {
    if (acc.inf) return n;
    acc = add_unchecked(E, acc, P);
  }
  return 0;
}

Transform Transform::then(const Transform& n) const {
  Transform out;
  out.u = u * n.u;
  out.r = r + u * u * n.r;
  out.s = s + u * n.s;
  out.t = t + u * u * u * n.t + s * u * u * n.r;
  return out;
}

Transform Transform::inverse() const {
  Transform out;
  out.u = 1 / u;
  out.r = -r / (u * u);
  out.s = -s / u;
  out.t = (r * s - t) / (u * u * u);
  return out;
}

std::array<mpq_class, 5> Transform::apply(const std::array<mpq_class, 5>& a) const {
  const mpq_class &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  mpq_class u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  std::array<mpq_class, 5> out;
  out[0] = (a1 + 2 * s) / u;
  out[1] = (a2 - s * a1 + 3 * r - s * s) / u2;
  out[2] = (a3 + r * a1 + 2 * t) / u3;
  out[3] = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  out[4] = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  return out;
}

Point Transform::apply(const Point& P) const {
  if (P.inf) return P;
  mpq_class xr = P.x - r;
  return Point::affine(xr / (u * u), (P.y - s * xr - t) / (u * u * u));
}

Curve apply(const Transform& T, const Curve& E) {
  auto a = T.apply(E.ainvs());
  for (const auto& q : a)
    if (q.get_den() != 1) throw std::logic_error("transform leaves a non-integral model");
  return curve_new(a[0].get_num(), a[1].get_num(), a[2].get_num(), a[3].get_num(), a[4].get_num());
}

std::string ReductionInfo::kodaira_string() const {
  switch (type) {
    case Kodaira::I0: return "I0";
    case Kodaira::In: return "I" + std::to_string(n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::I0s: return "I0*";
    case Kodaira::Ins: return "I" + std::to_string(n) + "*";
    case Kodaira::IVs: return "IV*";
    case Kodaira::IIIs: return "III*";
    case Kodaira::IIs: return "II*";
  }
  return "?";
}

namespace {

struct Model {
  mpz_class a1, a2, a3, a4, a6;

  void translate(const mpz_class& r, const mpz_class& s, const mpz_class& t) {
    mpz_class n1 = a1 + 2 * s;
    mpz_class n2 = a2 - s * a1 + 3 * r - s * s;
    mpz_class n3 = a3 + r * a1 + 2 * t;
    mpz_class n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    mpz_class n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    a1 = n1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
  }
};

struct TateResult {
  ReductionInfo info;
  Transform change;  // to a model minimal at p
};

// Tate's algorithm at p with the coordinate changes it performs recorded.
TateResult tate_local(const Curve& E, const mpz_class& p) {
  TateResult res;
  res.info.p = p;
  Model m{E.a1, E.a2, E.a3, E.a4, E.a6};
  Transform acc;
  auto shift = [&](const mpz_class& r, const mpz_class& s, const mpz_class& t) {
    m.translate(r, s, t);
    acc = acc.then(Transform{1, r, s, t});
  };
  auto val = [&](const mpz_class& z) { return valuation(z, p); };
  auto divisible = [&](const mpz_class& z, const mpz_class& q) { return mpz_divisible_p(z.get_mpz_t(), q.get_mpz_t()) != 0; };
  const mpz_class p2 = p * p, p3 = p2 * p, p4 = p3 * p, p6 = p4 * p2;
  const bool two = p == 2, three = p == 3;
  const mpz_class half = (p + 1) / 2;
  bool minimal_input = true;
  auto& info = res.info;

  for (;;) {
    Curve C = curve_new(m.a1, m.a2, m.a3, m.a4, m.a6);
    int vd = val(C.disc);
    info.ord_disc = vd;
    if (vd == 0) {
      info.type = Kodaira::I0;
      info.conductor_exponent = 0;
      break;
    }
    if (!divisible(C.c4, p)) {
      info.type = Kodaira::In;
      info.n = vd;
      info.conductor_exponent = 1;
      break;
    }
    // Move the singular point of the reduction to (0,0).
    mpz_class x0, y0;
    if (two || three) {
      bool found = false;
      for (long xi = 0; xi < p && !found; ++xi) {
        for (long yi = 0; yi < p && !found; ++yi) {
          mpz_class x = xi, y = yi;
          mpz_class f = y * y + m.a1 * x * y + m.a3 * y - x * x * x - m.a2 * x * x - m.a4 * x - m.a6;
          mpz_class fx = m.a1 * y - 3 * x * x - 2 * m.a2 * x - m.a4;
          mpz_class fy = 2 * y + m.a1 * x + m.a3;
          if (divisible(f, p) && divisible(fx, p) && divisible(fy, p)) {
            x0 = x;
            y0 = y;
            found = true;
          }
        }
      }
      if (!found) throw std::logic_error("no singular point mod p");
    } else {
      x0 = mod(-C.b2 * inverse_mod(12, p), p);
      y0 = mod(-(m.a1 * x0 + m.a3) * inverse_mod(2, p), p);
    }
    shift(x0, 0, y0);
    Curve D = curve_new(m.a1, m.a2, m.a3, m.a4, m.a6);
    if (!divisible(m.a6, p2)) {
      info.type = Kodaira::II;
      info.conductor_exponent = vd;
      break;
    }
    if (!divisible(D.b8, p3)) {
      info.type = Kodaira::III;
      info.conductor_exponent = vd - 1;
      break;
    }
    if (!divisible(D.b6, p3)) {
      info.type = Kodaira::IV;
      info.conductor_exponent = vd - 2;
      break;
    }
    // Arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
    if (two) {
      mpz_class a6q = m.a6 / 4;
      shift(0, mod(m.a2, 2), 2 * mod(a6q, 2));
    } else {
      shift(0, -m.a1 * half, -m.a3 * half);
    }
    mpz_class b = m.a2 / p, c = m.a4 / p2, d = m.a6 / p3;
    mpz_class w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    mpz_class xx = 3 * c - b * b;
    if (!divisible(w, p)) {
      info.type = Kodaira::I0s;
      info.conductor_exponent = vd - 4;
      break;
    }
    if (!divisible(xx, p)) {
      // Double root: move it to 0 and walk down the chain of components.
      mpz_class r;
      if (two) r = c;
      else if (three) r = b * c;
      else r = (b * c - 9 * d) * inverse_mod(2 * xx, p);
      shift(p * mod(r, p), 0, 0);
      int ix = 3, iy = 3;
      mpz_class mx = p2, my = p2;
      for (;;) {
        mpz_class xa2 = m.a2 / p, xa3 = m.a3 / my, xa4 = m.a4 / (p * mx), xa6 = m.a6 / (mx * my);
        if (!divisible(xa3 * xa3 + 4 * xa6, p)) break;
        mpz_class t = two ? mpz_class(my * xa6) : mpz_class(my * mod(-xa3 * half, p));
        shift(0, 0, t);
        my *= p;
        ++iy;
        xa2 = m.a2 / p;
        xa3 = m.a3 / my;
        xa4 = m.a4 / (p * mx);
        xa6 = m.a6 / (mx * my);
        if (!divisible(xa4 * xa4 - 4 * xa2 * xa6, p)) break;
        mpz_class rr = two ? mpz_class(mx * mod(xa6 * xa2, 2)) : mpz_class(mx * mod(-xa4 * inverse_mod(2 * xa2, p), p));
        shift(rr, 0, 0);
        mx *= p;
        ++ix;
      }
      info.type = Kodaira::Ins;
      info.n = ix + iy - 5;
      info.conductor_exponent = vd - ix - iy + 1;
      break;
    }
    // Triple root: move it to 0.
    mpz_class rt = three ? mpz_class(-d) : mpz_class(-b * inverse_mod(3, p));
    shift(p * mod(rt, p), 0, 0);
    mpz_class x3 = m.a3 / p2, x6 = m.a6 / p4;
    if (!divisible(x3 * x3 + 4 * x6, p)) {
      info.type = Kodaira::IVs;
      info.conductor_exponent = vd - 6;
      break;
    }
    mpz_class tt = two ? mpz_class(x6) : mpz_class(x3 * half);
    shift(0, 0, -p2 * mod(tt, p));
    if (!divisible(m.a4, p4)) {
      info.type = Kodaira::IIIs;
      info.conductor_exponent = vd - 7;
      break;
    }
    if (!divisible(m.a6, p6)) {
      info.type = Kodaira::IIs;
      info.conductor_exponent = vd - 8;
      break;
    }
    // Not minimal at p: scale by u = p and start over.
    minimal_input = false;
    m.a1 /= p;
    m.a2 /= p2;
    m.a3 /= p3;
    m.a4 /= p4;
    m.a6 /= p6;
    acc = acc.then(Transform{mpq_class(p), 0, 0, 0});
  }
  info.is_minimal = minimal_input;
  res.change = acc;
  return res;
}

Transform standardize(const Curve& E) {
  mpz_class s = (mpz_class(mod(E.a1, 2)) - E.a1) / 2;
  mpz_class a2s = E.a2 - s * E.a1 - s * s;
  // choose r so that a2s + 3r lies in {-1, 0, 1}
  mpz_class r;
  mpz_fdiv_q_ui(r.get_mpz_t(), mpz_class(-a2s + 1).get_mpz_t(), 3);
  mpz_class a3r = E.a3 + r * E.a1;
  mpz_class t = (mpz_class(mod(a3r, 2)) - a3r) / 2;
  return Transform{1, r, s, t};
}

}  // namespace

ReductionInfo tate_reduction(const Curve& E, const mpz_class& p) { return tate_local(E, p).info; }

std::vector<mpz_class> bad_primes(const Curve& E) {
  FactorBudget budget;
  budget.operations = 50'000'000;
  return prime_divisors(E.disc, budget);
}

MinimalModel minimal_model(const Curve& E) {
  Transform acc;
  Curve cur = E;
  for (const mpz_class& p : bad_primes(E)) {
    if (valuation(cur.disc, p) < 12) continue;
    TateResult tr = tate_local(cur, p);
    if (tr.info.is_minimal) continue;
    acc = acc.then(tr.change);
    cur = apply(tr.change, cur);
  }
  Transform st = standardize(cur);
  acc = acc.then(st);
  cur = apply(st, cur);
  return {cur, acc};
}

MinimalModel minimal_model(const std::array<mpq_class, 5>& a) {
  mpz_class D = 1;
  for (const auto& q : a) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  Transform scale{mpq_class(1, D), 0, 0, 0};
  auto b = scale.apply(a);
  Curve E = curve_new(b[0].get_num(), b[1].get_num(), b[2].get_num(), b[3].get_num(), b[4].get_num());
  MinimalModel mm = minimal_model(E);
  mm.change = scale.then(mm.change);
  return mm;
}

bool is_minimal(const Curve& E) {
  for (const mpz_class& p : bad_primes(E)) {
    if (valuation(E.disc, p) < 12) continue;
    if (!tate_local(E, p).info.is_minimal) return false;
  }
  return true;
}

ConductorReport conductor_and_szpiro(const Curve& E, long prec) {
  ConductorReport out{1, BigFloat(prec), {}};
  for (const mpz_class& p : bad_primes(E)) {
    ReductionInfo info = tate_reduction(E, p);
    if (!info.is_minimal) throw Error(ErrorCode::NotMinimal, "model is not minimal at " + p.get_str());
    for (int i = 0; i < info.conductor_exponent; ++i) out.conductor *= p;
    out.local.push_back(info);
  }
  if (out.conductor == 1) throw Error(ErrorCode::DegenerateSzpiro, "conductor is 1");
  out.szpiro = log_abs(E.disc, prec) / log_abs(out.conductor, prec);
  return out;
}

}  // namespace edslab
