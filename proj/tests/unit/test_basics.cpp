#include "doctest.h"
#include "edslab/bigfloat.hpp"
#include "edslab/error.hpp"
#include "edslab/numtheory.hpp"
#include "edslab/poly.hpp"
#include "testing.hpp"

using namespace edslab;
using testing::close;

TEST_CASE("valuations of integers and rationals") {
  CHECK(valuation(mpz_class(600), 2) == 3);
  CHECK(valuation(mpz_class(600), 5) == 2);
  CHECK(valuation(mpz_class(600), 7) == 0);
  CHECK(valuation(mpz_class(0), 3) == kInfiniteValuation);
  CHECK(valuation(mpq_class(9, 50), 5) == -2);
  mpz_class n = 48;
  CHECK(remove_factor(n, 2) == 4);
  CHECK(n == 3);
}

TEST_CASE("primality") {
  CHECK(primality(2) == Primality::Prime);
  CHECK(primality(561) == Primality::Composite);
  CHECK(primality(mpz_class("2305843009213693951")) == Primality::Prime);
  CHECK(primality(mpz_class("3825123056546413051")) == Primality::Composite);
  mpz_class m127 = (mpz_class(1) << 127) - 1;
  CHECK(primality(m127) == Primality::ProbablePrime);
  CHECK_FALSE(is_probable_prime(m127 * 3));
  CHECK_FALSE(is_probable_prime(1));
}

TEST_CASE("factorization") {
  mpz_class p("1000000007"), q("998244353");
  Factorization f = factor(p * p * q * 720);
  CHECK(f.complete());
  CHECK(f.factors[2] == 4);
  CHECK(f.factors[3] == 2);
  CHECK(f.factors[5] == 1);
  CHECK(f.factors[p] == 2);
  CHECK(f.factors[q] == 1);
  std::vector<mpz_class> pd = prime_divisors(mpz_class(-84));
  CHECK(pd == std::vector<mpz_class>{2, 3, 7});

  mpz_class big1, big2;
  mpz_nextprime(big1.get_mpz_t(), mpz_class("1000000000000000000000000000000").get_mpz_t());
  mpz_nextprime(big2.get_mpz_t(), big1.get_mpz_t());
  Factorization g = factor(big1 * big2, FactorBudget{1000, 100});
  CHECK_FALSE(g.complete());
  CHECK(g.budget_exhausted);
  CHECK(testing::error_of([&] { prime_divisors(big1 * big2, FactorBudget{1000, 100}); }) ==
        ErrorCode::FactorizationIncomplete);
}

TEST_CASE("polynomial arithmetic") {
  Poly a{-1, 0, 1};
  Poly b{-2, 1};
  CHECK((a * b).to_string() == "2,-1,-2,1");
  DivMod dm = divmod(a, b);
  CHECK(dm.quotient.to_string() == "2,1");
  CHECK(dm.remainder.to_string() == "3");
  CHECK(resultant(a, b) == 3);
  CHECK(gcd(a, Poly{1, 1}).to_string() == "1,1");
  CHECK(squarefree_part(Poly{1, 1} * Poly{1, 1} * Poly{0, 1}).to_string() == "0,1,1");
  CHECK(divides_in_zx(Poly{1, 1}, a));
  CHECK(divides(Poly{2, 2}, Poly{1, 1}));
  CHECK_FALSE(divides_in_zx(Poly{2, 2}, Poly{1, 1}));
  CHECK(a(mpq_class(1, 2)) == mpq_class(-3, 4));
  CHECK(Poly::parse("1/2, -3, 0").to_string() == "1/2,-3");
  CHECK(testing::error_of([] { Poly::parse("1,,2"); }) == ErrorCode::ParseError);
  CHECK(testing::error_of([] { Poly::parse("1,x"); }) == ErrorCode::ParseError);
}

TEST_CASE("homogenize and interpolate") {
  // p(x) = x^2 + 1 at x = X/Z, total degree 3: X^2 Z + Z^3.
  Poly h = homogenize(Poly{1, 0, 1}, Poly::x(), Poly::constant(1), 3);
  CHECK(h.to_string() == "1,0,1");
  std::vector<mpq_class> xs{0, 1, 2, 3}, ys{1, 2, 9, 28};
  CHECK(interpolate(xs, ys).to_string() == "1,0,0,1");
}

TEST_CASE("bigfloat") {
  BigFloat two(2, 192);
  BigFloat gauss = agm(BigFloat(1, 192), sqrt(two));
  CHECK(close(gauss, "1.19814023473559220743992249228032387822721266321565", 1e-50));
  CHECK(close(const_pi(192), "3.14159265358979323846264338327950288419716939937510", 1e-50));
  CHECK(close(log_abs(mpq_class(-1, 8), 192), -3 * log(two), BigFloat::from_double(1e-55, 192)));
  CHECK(to_mpz(round(BigFloat::from_string("12.5000001", 192))) == 13);
  CHECK(BigFloat::from_string("5.9e43", 192).to_string(3) == "5.90e+43");
}
