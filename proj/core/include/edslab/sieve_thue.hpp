#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "edslab/bigfloat.hpp"
#include "edslab/curve.hpp"
#include "edslab/divpoly.hpp"
#include "edslab/numtheory.hpp"
#include "edslab/poly.hpp"

namespace edslab {

enum class CofactorStatus { One, ProbablePrime, Composite, Unknown };
const char* cofactor_status_name(CofactorStatus s);

// B = cofactor * prod p^e; the cofactor is coprime to every listed prime.
struct FactorClassification {
  mpz_class B;
  std::vector<std::pair<mpz_class, int>> known_factors;
  mpz_class cofactor = 1;
  CofactorStatus cofactor_status = CofactorStatus::One;
};

// Composite: the split attempt was skipped (zero budget). Unknown: budget ran
// out on a composite remainder.
FactorClassification classify(const mpz_class& B, const std::vector<mpz_class>& base_primes,
                              const FactorBudget& budget = {});

enum class PrimeCount { Zero, One, TwoOrMore, Unknown };
const char* prime_count_name(PrimeCount c);
enum class Tristate { False, True, Unknown };
const char* tristate_name(Tristate t);

// Distinct primes of R not dividing `known`, capped at two; no factoring.
PrimeCount count_new_primes(const mpz_class& R, const mpz_class& known);
// 1 or a prime power.
bool is_one_or_prime_power(const mpz_class& n);

struct SieveRecord {
  long n = 0;
  FactorClassification class_P;       // B_{nP'}
  FactorClassification class_sigma;   // B_{n sigma(P')}
  PrimeCount new_primes_P = PrimeCount::Unknown;      // outside S(P')
  PrimeCount new_primes_sigma = PrimeCount::Unknown;  // outside primes(B_{nP'}) and S(sigma P')
  PrimeCount new_primes_sigma_S = PrimeCount::Unknown;  // outside S(P'), the Thue hypothesis
  bool all_primes_in_S = false;                       // B_{nP'} is S(P')-integral
  Tristate in_I = Tristate::Unknown;                  // B_{n sigma(P')} is 1 or a prime power
  bool divisibility_ok = false;                       // B_{nP'} | B_{n sigma(P')}
};

struct SieveOptions {
  FactorBudget budget;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Records ordered by n = 1..n_max regardless of the thread schedule.
std::vector<SieveRecord> sieve_magnified(const Isogeny& sigma, const Point& P, long n_max,
                                         const SieveOptions& options = {});

// Form F(X, Z) = sum c_i X^i Z^{degree - i}; squared forms satisfy F(A, B^2) = value^2.
struct ThueInstance {
  Poly form;
  int degree = 0;
  bool squared = false;
  mpz_class rhs;
  int r = 0;  // least r with rhs | deg^2 Delta'^r
  BigFloat rhs_bound;
};

mpz_class evaluate_form(const ThueInstance& inst, const mpz_class& X, const mpz_class& Z);

struct ThueReport {
  long n = 0;
  mpz_class A, B;
  mpz_class form_value;                 // F(A_{nP'}, B_{nP'}^2)
  std::optional<mpz_class> value;       // B^{d-1} psi_sigma(nP'), up to sign for squared forms
  std::optional<int> minimal_r;         // least r <= r_max with value | deg^2 Delta'^r
  std::optional<std::size_t> matched;   // instance with rhs == value
  BigFloat rhs_bound;
  std::vector<ThueInstance> instances;
};

ThueInstance thue_template(const Isogeny& sigma, long prec = kDefaultPrecision);
// Throws FirstAlternative when every prime of B_{nP'} lies in S(P').
ThueReport emit_thue(const Isogeny& sigma, long n, const Point& P, int r_max = 3,
                     long prec = kDefaultPrecision);

// (X, Z) with |X| <= box, 1 <= Z <= box.
std::vector<std::pair<mpz_class, mpz_class>> brute_force_thue(const ThueInstance& inst, long box);

}  // namespace edslab
