#include "edslab/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "edslab/error.hpp"

namespace edslab {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly(std::vector<mpq_class>{c}); }
Poly Poly::x() { return Poly{0, 1}; }
Poly Poly::linear(const mpq_class& root) { return Poly(std::vector<mpq_class>{-root, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

mpq_class Poly::lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

bool Poly::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

mpq_class Poly::operator()(const mpq_class& x) const {
  // Horner over a common denominator keeps intermediate sizes linear.
  if (c_.empty()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpq_class acc = c_.back();
  mpz_class dpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + c_[i] * dpow;
  }
  acc /= dpow;
  return acc;
}

BigFloat Poly::operator()(const BigFloat& x) const {
  BigFloat acc(x.precision());
  for (int i = degree(); i >= 0; --i) acc = acc * x + BigFloat(c_[i], x.precision());
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  bool integral = a.is_integral() && b.is_integral();
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  if (integral) {
    std::vector<mpz_class> acc(out.size());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      const mpz_class& ai = a.c_[i].get_num();
      for (size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), b.c_[j].get_num_mpz_t());
    }
    for (size_t k = 0; k < out.size(); ++k) out[k] = acc[k];
  } else {
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpq_class& s) {
  for (auto& q : c_) q *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly Poly::derivative() const {
  std::vector<mpq_class> out;
  for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * mpq_class(1 / lead());
}

Poly Poly::pow(unsigned n) const {
  Poly result = Poly::constant(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

Poly Poly::parse(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error(ErrorCode::ParseError, "empty coefficient in '" + text + "'");
    mpq_class q;
    if (q.set_str(item.substr(a, b - a + 1), 10) != 0 || q.get_den() == 0)
      throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
    q.canonicalize();
    out.push_back(q);
  }
  return Poly(std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1);
  mpq_class inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

bool divides(const Poly& b, const Poly& a) { return divmod(a, b).remainder.is_zero(); }

bool divides_in_zx(const Poly& b, const Poly& a) {
  if (!a.is_integral() || !b.is_integral()) return false;
  DivMod dm = divmod(a, b);
  return dm.remainder.is_zero() && dm.quotient.is_integral();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree_part(const Poly& a) {
  if (a.degree() <= 0) return Poly::constant(1);
  Poly g = gcd(a, a.derivative());
  return divmod(a, g).quotient.monic();
}

mpq_class resultant(const Poly& a_in, const Poly& b_in) {
  // Euclidean recursion: Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r).
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  Poly a = a_in, b = b_in;
  mpq_class acc = 1;
  while (b.degree() > 0) {
    Poly r = divmod(a, b).remainder;
    if (r.is_zero()) return 0;
    int da = a.degree(), db = b.degree(), dr = r.degree();
    if ((da % 2) && (db % 2)) acc = -acc;
    mpq_class lc = b.lead();
    for (int i = 0; i < da - dr; ++i) acc *= lc;
    a = std::move(b);
    b = std::move(r);
  }
  mpq_class c = b.lead();
  for (int i = 0; i < a.degree(); ++i) acc *= c;
  return acc;
}

Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int total) {
  if (p.is_zero()) return Poly();
  if (total < p.degree()) throw std::invalid_argument("homogenize: total below degree");
  std::vector<Poly> npow(total + 1), dpow(total + 1);
  npow[0] = dpow[0] = Poly::constant(1);
  for (int i = 1; i <= total; ++i) {
    npow[i] = npow[i - 1] * num;
    dpow[i] = dpow[i - 1] * den;
  }
  Poly out;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out += p.coeff(i) * (npow[i] * dpow[total - i]);
  return out;
}

Poly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  Poly out;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    mpq_class denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    out += basis * mpq_class(ys[i] / denom);
  }
  return out;
}

}  // namespace edslab
