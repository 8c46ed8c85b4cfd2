#include "edslab/numtheory.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "edslab/error.hpp"

namespace edslab {

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) return kInfiniteValuation;
  mpz_class m = n;
  return remove_factor(m, p);
}

int valuation(const mpq_class& q, const mpz_class& p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

int remove_factor(mpz_class& n, const mpz_class& p) {
  if (n == 0) return kInfiniteValuation;
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

namespace {

const unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const mpz_class& n, unsigned long base) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x, a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Primality primality(const mpz_class& n) {
  if (n < 2) return Primality::Composite;
  for (unsigned long w : kWitnesses) {
    if (n == w) return Primality::Prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return Primality::Composite;
  }
  // GMP 6.2 runs Baillie-PSW for reps <= 24; no BPSW pseudoprime exists below 2^64.
  if (mpz_probab_prime_p(n.get_mpz_t(), 24) == 0) return Primality::Composite;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return Primality::Prime;
  for (unsigned long w : kWitnesses)
    if (!miller_rabin(n, w)) return Primality::Composite;
  return Primality::ProbablePrime;
}

bool is_probable_prime(const mpz_class& n) { return primality(n) != Primality::Composite; }

const std::vector<std::uint32_t>& small_primes(std::uint32_t limit) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint32_t sieved = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (limit > sieved) {
    std::vector<bool> composite(limit + 1, false);
    primes.clear();
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
    }
    sieved = limit;
  }
  return primes;
}

namespace {

struct Spend {
  std::uint64_t left;
  bool take(std::uint64_t n) {
    if (left < n) {
      left = 0;
      return false;
    }
    left -= n;
    return true;
  }
};

// Stage-one p-1 with bound b1; returns a nontrivial factor or 0.
mpz_class pminus1(const mpz_class& n, std::uint32_t b1, Spend& spend) {
  mpz_class a = 2, g;
  const auto& primes = small_primes(std::max<std::uint32_t>(b1, 1000));
  for (std::uint32_t p : primes) {
    if (p > b1) break;
    std::uint64_t q = p;
    while (q * p <= b1) q *= p;
    if (!spend.take(64)) return 0;
    mpz_class e = static_cast<unsigned long>(q);
    mpz_powm(a.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  }
  g = gcd(a - 1, n);
  if (g > 1 && g < n) return g;
  return 0;
}

// Brent's variant of Pollard rho with batched gcds.
mpz_class rho(const mpz_class& n, unsigned long c, Spend& spend) {
  mpz_class y = 2, x, ys, q = 1, g = 1;
  const std::uint64_t m = 128;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t steps = std::min(m, r - k);
      if (!spend.take(2 * steps)) return 0;
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

}  // namespace

Factorization factor(const mpz_class& n_in, const FactorBudget& budget) {
  Factorization out;
  mpz_class n = abs(n_in);
  if (n == 0) {
    out.cofactor = 0;
    return out;
  }
  for (std::uint32_t p : small_primes(budget.trial_limit)) {
    if (p > budget.trial_limit) break;
    if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int e = remove_factor(n, mpz_class(static_cast<unsigned long>(p)));
      out.factors[mpz_class(static_cast<unsigned long>(p))] += e;
    }
  }
  Spend spend{budget.operations};
  std::deque<mpz_class> work;
  if (n > 1) work.push_back(n);
  while (!work.empty()) {
    mpz_class m = work.front();
    work.pop_front();
    if (primality(m) != Primality::Composite) {
      out.factors[m] += 1;
      continue;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      for (unsigned long k = 2;; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k)) {
          for (unsigned long i = 0; i < k; ++i) work.push_back(root);
          break;
        }
      }
      continue;
    }
    mpz_class d = pminus1(m, 20000, spend);
    for (unsigned long c = 1; d == 0 && spend.left > 0 && c < 16; ++c) d = rho(m, c, spend);
    if (d == 0) {
      out.cofactor *= m;
      out.budget_exhausted = true;
      continue;
    }
    work.push_back(d);
    work.push_back(m / d);
  }
  return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n, const FactorBudget& budget) {
  Factorization f = factor(n, budget);
  if (!f.complete())
    throw Error(ErrorCode::FactorizationIncomplete, "cannot factor " + n.get_str());
  std::vector<mpz_class> out;
  for (const auto& [p, e] : f.factors) out.push_back(p);
  return out;
}

}  // namespace edslab
