#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace edslab {

// Sentinel for ord_p(0).
inline constexpr int kInfiniteValuation = 1 << 30;

int valuation(const mpz_class& n, const mpz_class& p);
int valuation(const mpq_class& q, const mpz_class& p);
// Strips all factors p from n in place and returns the exponent.
int remove_factor(mpz_class& n, const mpz_class& p);

enum class Primality { Composite, Prime, ProbablePrime };

// Exact below 2^64; above, BPSW followed by Miller-Rabin on the fixed bases
// 2, 3, 5, ..., 37 (reported as ProbablePrime).
Primality primality(const mpz_class& n);
bool is_probable_prime(const mpz_class& n);

const std::vector<std::uint32_t>& small_primes(std::uint32_t limit);

struct FactorBudget {
  // Upper bound on modular multiplications spent in rho and p-1.
  std::uint64_t operations = 2'000'000;
  std::uint32_t trial_limit = 1'000'000;
};

struct Factorization {
  std::map<mpz_class, int> factors;  // certified or probable primes
  mpz_class cofactor = 1;            // unfactored remainder, 1 when complete
  bool budget_exhausted = false;
  bool complete() const { return cofactor == 1; }
};

// Trial division, then alternating Pollard p-1 and Brent rho under budget.
Factorization factor(const mpz_class& n, const FactorBudget& budget = {});
// Sorted distinct primes of a nonzero integer; throws FactorizationIncomplete.
std::vector<mpz_class> prime_divisors(const mpz_class& n, const FactorBudget& budget = {});

}  // namespace edslab
