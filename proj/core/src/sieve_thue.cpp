#include "edslab/sieve_thue.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <mutex>
#include <thread>

#include "edslab/eds.hpp"
#include "edslab/error.hpp"
#include "edslab/heights.hpp"

namespace edslab {

namespace {

constexpr std::size_t kMaxInstances = 200000;

mpz_class strip_common(mpz_class R, const mpz_class& known) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), R.get_mpz_t(), known.get_mpz_t());
  while (g != 1 && g != 0) {
    R /= g;
    mpz_gcd(g.get_mpz_t(), R.get_mpz_t(), g.get_mpz_t());
  }
  return R;
}

mpz_class radical_root(mpz_class R) {
  while (R > 1 && mpz_perfect_power_p(R.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), R.get_mpz_t(), k)) {
        R = root;
        break;
      }
    }
  }
  return R;
}

mpz_class as_integer(const mpq_class& q) {
  if (q.get_den() != 1) throw Error(ErrorCode::PreconditionViolated, "form coefficient is not integral");
  return q.get_num();
}

}  // namespace

const char* cofactor_status_name(CofactorStatus s) {
  switch (s) {
    case CofactorStatus::One: return "One";
    case CofactorStatus::ProbablePrime: return "ProbablePrime";
    case CofactorStatus::Composite: return "Composite";
    case CofactorStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* prime_count_name(PrimeCount c) {
  switch (c) {
    case PrimeCount::Zero: return "0";
    case PrimeCount::One: return "1";
    case PrimeCount::TwoOrMore: return ">=2";
    case PrimeCount::Unknown: return "Unknown";
  }
  return "?";
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

FactorClassification classify(const mpz_class& B, const std::vector<mpz_class>& base_primes,
                              const FactorBudget& budget) {
  if (B < 1) throw Error(ErrorCode::PreconditionViolated, "B must be positive");
  FactorClassification fc;
  fc.B = B;
  mpz_class R = B;
  std::map<mpz_class, int> found;
  for (const auto& p : base_primes) {
    if (p < 2) continue;
    int e = remove_factor(R, p);
    if (e) found[p] += e;
  }
  for (std::uint32_t p : small_primes(budget.trial_limit)) {
    if (R == 1) break;
    if (mpz_divisible_ui_p(R.get_mpz_t(), p)) {
      mpz_class pz(static_cast<unsigned long>(p));
      found[pz] += remove_factor(R, pz);
    }
  }
  if (R == 1) {
    fc.cofactor_status = CofactorStatus::One;
  } else if (primality(R) != Primality::Composite) {
    fc.cofactor_status = CofactorStatus::ProbablePrime;
  } else if (budget.operations == 0) {
    fc.cofactor_status = CofactorStatus::Composite;
  } else {
    FactorBudget split = budget;
    split.trial_limit = 0;
    Factorization f = factor(R, split);
    for (const auto& [p, e] : f.factors) found[p] += e;
    R = f.cofactor;
    for (const auto& [p, e] : found) {
      int extra = remove_factor(R, p);
      found[p] += extra;
    }
    fc.cofactor_status = R == 1 ? CofactorStatus::One : CofactorStatus::Unknown;
  }
  fc.cofactor = R;
  fc.known_factors.assign(found.begin(), found.end());
  return fc;
}

PrimeCount count_new_primes(const mpz_class& R, const mpz_class& known) {
  mpz_class rest = radical_root(strip_common(abs(R), abs(known)));
  if (rest == 0) return PrimeCount::Unknown;
  if (rest == 1) return PrimeCount::Zero;
  return primality(rest) != Primality::Composite ? PrimeCount::One : PrimeCount::TwoOrMore;
}

bool is_one_or_prime_power(const mpz_class& n) {
  mpz_class r = radical_root(abs(n));
  return r == 1 || primality(r) != Primality::Composite;
}

std::vector<SieveRecord> sieve_magnified(const Isogeny& sigma, const Point& P, long n_max,
                                         const SieveOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::PreconditionViolated, "n_max must be at least 1");
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "P' is the identity");
  if (!on_curve(sigma.domain, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
  if (torsion_order(sigma.domain, P) > 0) throw Error(ErrorCode::TorsionPoint, P.to_string());
  Point Q = sigma.apply(P);
  std::vector<Point> mp = multiples(sigma.domain, P, n_max);
  std::vector<Point> mq = multiples(sigma.codomain, Q, n_max);
  mpz_class BP1 = P.B(), BQ1 = Q.B();
  std::vector<mpz_class> S = prime_divisors(BP1), S_sigma = prime_divisors(BQ1);

  std::vector<SieveRecord> out(n_max);
  std::atomic<long> next{0};
  auto work = [&] {
    for (long i; (i = next.fetch_add(1)) < n_max;) {
      SieveRecord r;
      r.n = i + 1;
      mpz_class BP = mp[i].B(), BQ = mq[i].B();
      r.class_P = classify(BP, S, options.budget);
      std::vector<mpz_class> base = S_sigma;
      for (const auto& [p, e] : r.class_P.known_factors) base.push_back(p);
      r.class_sigma = classify(BQ, base, options.budget);
      r.new_primes_P = count_new_primes(BP, BP1);
      r.all_primes_in_S = r.new_primes_P == PrimeCount::Zero;
      r.new_primes_sigma = count_new_primes(BQ, BP * BQ1);
      r.new_primes_sigma_S = count_new_primes(BQ, BP1);
      r.in_I = is_one_or_prime_power(BQ) ? Tristate::True : Tristate::False;
      r.divisibility_ok = mpz_divisible_p(BQ.get_mpz_t(), BP.get_mpz_t()) != 0;
      out[i] = std::move(r);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, n_max));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_max;
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

mpz_class evaluate_form(const ThueInstance& inst, const mpz_class& X, const mpz_class& Z) {
  mpz_class acc = 0, zpow = 1;
  for (int i = inst.degree; i >= 0; --i) {
    acc = acc * X + as_integer(inst.form.coeff(i)) * zpow;
    zpow *= Z;
  }
  return acc;
}

ThueInstance thue_template(const Isogeny& sigma, long prec) {
  ThueInstance t;
  long d = sigma.degree;
  if (d % 2 == 1) {
    Poly G = sigma.kernel_poly * mpq_class(sigma.d_sigma);
    if (G.is_integral() && G * G == sigma.psi_sq) {
      t.form = G;
      t.degree = static_cast<int>((d - 1) / 2);
    }
  }
  if (t.form.is_zero()) {
    t.form = sigma.psi_sq;
    t.degree = static_cast<int>(d - 1);
    t.squared = true;
  }
  if (!t.form.is_integral()) throw Error(ErrorCode::PreconditionViolated, "psi_sigma^2 is not integral");
  t.rhs_bound = d * exp(BigFloat(3 * d, prec) / 2 * curve_height(sigma.domain, prec));
  return t;
}

ThueReport emit_thue(const Isogeny& sigma, long n, const Point& P, int r_max, long prec) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "n must be positive");
  if (r_max < 0) throw Error(ErrorCode::PreconditionViolated, "r_max must be nonnegative");
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "P' is the identity");
  if (!on_curve(sigma.domain, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
  Point nP = point_mul(sigma.domain, n, P);
  if (nP.inf) throw Error(ErrorCode::TorsionPoint, "nP' is the identity");
  if (count_new_primes(nP.B(), P.B()) == PrimeCount::Zero)
    throw Error(ErrorCode::FirstAlternative, "nP' is an S(P')-integer point");

  ThueInstance base = thue_template(sigma, prec);
  ThueReport rep;
  rep.n = n;
  rep.A = nP.A();
  rep.B = nP.B();
  rep.rhs_bound = base.rhs_bound;
  rep.form_value = evaluate_form(base, rep.A, rep.B * rep.B);
  if (!base.squared) {
    rep.value = rep.form_value;
  } else if (rep.form_value >= 0 && mpz_perfect_square_p(rep.form_value.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), rep.form_value.get_mpz_t());
    rep.value = s;
  }

  mpz_class deg(sigma.degree);
  mpz_class disc = abs(sigma.domain.disc);
  std::set<mpz_class> primes;
  for (const auto& p : prime_divisors(deg * disc)) primes.insert(p);
  std::vector<mpz_class> ps(primes.begin(), primes.end());
  std::vector<int> v_deg, v_disc;
  for (const auto& p : ps) {
    v_deg.push_back(valuation(deg, p));
    v_disc.push_back(valuation(disc, p));
  }
  auto least_r = [&](const std::vector<int>& exps) {
    int r = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      int over = exps[i] - 2 * v_deg[i];
      if (over <= 0) continue;
      if (v_disc[i] == 0) return -1;
      r = std::max(r, (over + v_disc[i] - 1) / v_disc[i]);
    }
    return r;
  };

  if (rep.value && *rep.value != 0) {
    mpz_class rest = abs(*rep.value);
    std::vector<int> exps;
    for (const auto& p : ps) exps.push_back(remove_factor(rest, p));
    int r = least_r(exps);
    if (rest == 1 && r >= 0 && r <= r_max) rep.minimal_r = r;
  }

  std::vector<int> cap;
  for (std::size_t i = 0; i < ps.size(); ++i) cap.push_back(2 * v_deg[i] + r_max * v_disc[i]);
  std::vector<int> exps(ps.size(), 0);
  std::vector<mpz_class> divisors;
  auto dfs = [&](auto&& self, std::size_t i, const mpz_class& d) -> void {
    if (i == ps.size()) {
      if (divisors.size() >= kMaxInstances)
        throw Error(ErrorCode::BudgetExhausted, "too many Thue instances; lower r_max");
      divisors.push_back(d);
      return;
    }
    mpz_class cur = d;
    for (int e = 0; e <= cap[i]; ++e) {
      if (BigFloat(cur, prec) > rep.rhs_bound) break;
      exps[i] = e;
      self(self, i + 1, cur);
      cur *= ps[i];
    }
    exps[i] = 0;
  };
  dfs(dfs, 0, mpz_class(1));
  std::sort(divisors.begin(), divisors.end());
  for (const auto& d : divisors) {
    mpz_class rest = d;
    std::vector<int> e;
    for (const auto& p : ps) e.push_back(remove_factor(rest, p));
    int r = least_r(e);
    for (int sign : {1, -1}) {
      ThueInstance inst = base;
      inst.rhs = sign * d;
      inst.r = r;
      if (rep.value && *rep.value == inst.rhs) rep.matched = rep.instances.size();
      rep.instances.push_back(std::move(inst));
    }
  }
  return rep;
}

std::vector<std::pair<mpz_class, mpz_class>> brute_force_thue(const ThueInstance& inst, long box) {
  if (box < 1) throw Error(ErrorCode::PreconditionViolated, "box must be at least 1");
  mpz_class target = inst.squared ? mpz_class(inst.rhs * inst.rhs) : inst.rhs;
  std::vector<mpz_class> c;
  for (int i = 0; i <= inst.degree; ++i) c.push_back(as_integer(inst.form.coeff(i)));
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (long z = 1; z <= box; ++z) {
    // Coefficients of F(X, z) as a polynomial in X.
    std::vector<mpz_class> cz(c.size());
    mpz_class zp = 1;
    for (int i = inst.degree; i >= 0; --i) {
      cz[i] = c[i] * zp;
      zp *= z;
    }
    for (long x = -box; x <= box; ++x) {
      mpz_class acc = 0;
      for (int i = inst.degree; i >= 0; --i) acc = acc * x + cz[i];
      if (acc == target) out.emplace_back(mpz_class(x), mpz_class(z));
    }
  }
  return out;
}

}  // namespace edslab
