#include "doctest.h"
#include "edslab/eds.hpp"
#include "edslab/fixtures.hpp"
#include "edslab/sieve_thue.hpp"
#include "testing.hpp"

using namespace edslab;

namespace {

mpz_class next_prime(const char* from) {
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), mpz_class(from).get_mpz_t());
  return p;
}

Isogeny magnified() {
  return velu(curve_from_string(fixtures::kMagnifiedCurve), Poly::parse(fixtures::kMagnifiedKernel));
}

}  // namespace

TEST_CASE("classify") {
  FactorClassification c = classify(600, {2, 3});
  CHECK(c.cofactor == 1);
  CHECK(c.cofactor_status == CofactorStatus::One);
  mpz_class prod = c.cofactor;
  for (const auto& [p, e] : c.known_factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  CHECK(prod == 600);

  mpz_class p = next_prime("100000000000000000000000000000000000000");
  FactorClassification q = classify(p * 12, {2});
  CHECK(q.cofactor == p);
  CHECK(q.cofactor_status == CofactorStatus::ProbablePrime);

  mpz_class r = next_prime("1000000000000000000000000000000");
  FactorClassification z = classify(p * r, {}, FactorBudget{0, 1000});
  CHECK(z.cofactor == p * r);
  CHECK(z.cofactor_status == CofactorStatus::Composite);
  FactorClassification u = classify(p * r, {}, FactorBudget{500, 1000});
  CHECK(u.cofactor_status == CofactorStatus::Unknown);
  CHECK(std::string(cofactor_status_name(CofactorStatus::ProbablePrime)) == "ProbablePrime");
}

TEST_CASE("counting new primes without factoring") {
  CHECK(count_new_primes(1, 6) == PrimeCount::Zero);
  CHECK(count_new_primes(72, 6) == PrimeCount::Zero);
  CHECK(count_new_primes(2 * 3 * 49, 6) == PrimeCount::One);
  CHECK(count_new_primes(4 * 35, 2) == PrimeCount::TwoOrMore);
  mpz_class p = next_prime("100000000000000000000000000000000000000");
  CHECK(count_new_primes(p * p * p * 8, 2) == PrimeCount::One);
  CHECK(count_new_primes(p * next_prime("1000000000000000000000"), 1) == PrimeCount::TwoOrMore);
  CHECK(is_one_or_prime_power(1));
  CHECK(is_one_or_prime_power(p * p));
  CHECK(is_one_or_prime_power(32));
  CHECK_FALSE(is_one_or_prime_power(12));
  CHECK(std::string(prime_count_name(PrimeCount::TwoOrMore)) == ">=2");
}

TEST_CASE("sieve on the magnified fixture") {
  Isogeny s = magnified();
  Point P = Point::parse(fixtures::kMagnifiedPoint);
  SieveOptions serial;
  serial.threads = 1;
  std::vector<SieveRecord> a = sieve_magnified(s, P, 14, serial);
  SieveOptions wide;
  wide.threads = 4;
  std::vector<SieveRecord> b = sieve_magnified(s, P, 14, wide);
  REQUIRE(a.size() == 14);
  REQUIRE(b.size() == 14);
  std::vector<Point> mp = multiples(s.domain, P, 14);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(i);
    CHECK(a[i].n == static_cast<long>(i + 1));
    CHECK(b[i].n == a[i].n);
    CHECK(a[i].divisibility_ok);
    CHECK(a[i].class_P.B == mp[i].B());
    CHECK(a[i].class_sigma.B == s.apply(mp[i]).B());
    CHECK(b[i].class_sigma.B == a[i].class_sigma.B);
    CHECK(b[i].new_primes_sigma == a[i].new_primes_sigma);
    CHECK(b[i].in_I == a[i].in_I);
  }
  // B_{P'} = 1, so S(P') is empty.
  CHECK(a[0].all_primes_in_S);
  CHECK_FALSE(a[1].all_primes_in_S);
  CHECK(testing::error_of([&] { sieve_magnified(s, Point::parse("0,0"), 3); }) == ErrorCode::TorsionPoint);
  CHECK(testing::error_of([&] { sieve_magnified(s, Point::parse("1,1"), 3); }) == ErrorCode::PointNotOnCurve);
}

TEST_CASE("Thue templates") {
  Curve E = curve_from_string("[0,0,1,-1,0]");
  ThueInstance two = thue_template(multiplication(E, 2));
  CHECK(two.squared);
  CHECK(two.degree == 3);
  ThueInstance three = thue_template(multiplication(E, 3));
  CHECK_FALSE(three.squared);
  CHECK(three.degree == 4);
  CHECK(three.form.is_integral());
  Point P = Point::parse("0,0");
  for (long n = 1; n <= 6; ++n) {
    Point Q = point_mul(E, n, P);
    mpz_class B = Q.B();
    // F(A, B^2) = B^8 psi_3(Q).
    mpz_class B8;
    mpz_pow_ui(B8.get_mpz_t(), B.get_mpz_t(), 8);
    CHECK(mpq_class(evaluate_form(three, Q.A(), B * B)) == psi_value(E, Q, 3) * B8);
  }
}

TEST_CASE("emit_thue and brute force") {
  Curve E = curve_from_string("[0,0,1,-1,0]");
  Isogeny two = multiplication(E, 2);
  Point P = Point::parse("0,0");
  ThueReport r = emit_thue(two, 5, P);
  REQUIRE(r.matched.has_value());
  REQUIRE(r.value.has_value());
  const ThueInstance& inst = r.instances[*r.matched];
  CHECK(inst.rhs == *r.value);
  CHECK(mpz_divisible_p(r.form_value.get_mpz_t(), r.value->get_mpz_t()));
  CHECK(evaluate_form(inst, r.A, r.B * r.B) == r.form_value);
  CHECK(BigFloat(mpz_class(abs(inst.rhs)), 192) <= inst.rhs_bound);
  auto sols = brute_force_thue(inst, 20);
  bool found = false;
  for (const auto& [X, Z] : sols) {
    CHECK(evaluate_form(inst, X, Z) == inst.rhs * inst.rhs);
    found = found || (X == r.A && Z == r.B * r.B);
  }
  CHECK(found);
  for (const auto& i : r.instances) CHECK(BigFloat(mpz_class(abs(i.rhs)), 192) <= i.rhs_bound);
}

TEST_CASE("emit_thue first alternative and errors") {
  Isogeny s = magnified();
  CHECK(testing::error_of([&] { emit_thue(s, 1, Point::parse(fixtures::kMagnifiedPoint)); }) ==
        ErrorCode::FirstAlternative);
  CHECK(testing::error_of([&] { emit_thue(s, 0, Point::parse(fixtures::kMagnifiedPoint)); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(testing::error_of([&] { emit_thue(s, 2, Point::parse("0,0")); }) == ErrorCode::TorsionPoint);
}
