#include "edslab/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace edslab {

namespace {

long join(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
BigFloat binary(const BigFloat& a, const BigFloat& b, Fn fn) {
  BigFloat r(join(a, b));
  fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat::BigFloat(long prec) : prec_(prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long prec) : prec_(prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, long prec) : prec_(prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, long prec) : prec_(prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_double(double value, long prec) {
  BigFloat r(prec);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& text, long prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal literal: " + text);
  return r;
}

BigFloat::BigFloat(const BigFloat& other) : prec_(other.prec_) {
  mpfr_init2(value_, prec_);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(value_, prec_);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      mpfr_set_prec(value_, other.prec_);
      prec_ = other.prec_;
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(prec_ * 0.30103) - 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

int BigFloat::sign() const { return mpfr_sgn(value_); }
bool BigFloat::is_finite() const { return mpfr_number_p(value_) != 0; }
bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat BigFloat::operator-() const {
  BigFloat r(prec_);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator/(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()); }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.raw(), b.raw()); }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.raw(), b.raw()); }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.raw(), b.raw()); }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()); }
bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
bool operator<=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
bool operator>=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_pow); }

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat agm(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_agm); }

BigFloat round(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_round(r.raw(), x.raw());
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat const_pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat log_abs(const mpz_class& z, long prec) {
  BigFloat wide(mpz_class(abs(z)), prec + 16);
  BigFloat r(prec);
  mpfr_log(r.raw(), wide.raw(), MPFR_RNDN);
  return r;
}

BigFloat log_abs(const mpq_class& q, long prec) {
  return log_abs(q.get_num(), prec) - log_abs(q.get_den(), prec);
}

mpz_class to_mpz(const BigFloat& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

}  // namespace edslab
