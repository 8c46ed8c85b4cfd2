#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace edslab {

inline constexpr long kDefaultPrecision = 192;

// Binary floating value with an explicit precision in bits.
// Binary operations round to the larger precision of the operands.
class BigFloat {
 public:
  explicit BigFloat(long prec = kDefaultPrecision);
  BigFloat(long value, long prec);
  BigFloat(const mpz_class& value, long prec);
  BigFloat(const mpq_class& value, long prec);
  static BigFloat from_double(double value, long prec);
  // Decimal literal such as "5.9e43", rounded once.
  static BigFloat from_string(const std::string& text, long prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return prec_; }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 0) const;
  int sign() const;
  bool is_finite() const;
  bool is_zero() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b);
  friend BigFloat operator+(long a, const BigFloat& b);
  friend BigFloat operator-(long a, const BigFloat& b);
  friend BigFloat operator/(long a, const BigFloat& b);

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b);
  friend bool operator>=(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, long b);
  friend bool operator>(const BigFloat& a, long b);
  friend bool operator<=(const BigFloat& a, long b);
  friend bool operator>=(const BigFloat& a, long b);

 private:
  mpfr_t value_;
  long prec_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat agm(const BigFloat& a, const BigFloat& b);
BigFloat round(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat const_pi(long prec);
// log|z| for a nonzero integer; exact input, one rounding.
BigFloat log_abs(const mpz_class& z, long prec);
BigFloat log_abs(const mpq_class& q, long prec);
mpz_class to_mpz(const BigFloat& x);

}  // namespace edslab
