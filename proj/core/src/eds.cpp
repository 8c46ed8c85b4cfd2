#include "edslab/eds.hpp"

#include "edslab/error.hpp"
#include "edslab/heights.hpp"

namespace edslab {

EDSTerm term_of(long n, const Point& Q) {
  EDSTerm t;
  t.n = n;
  if (Q.inf) {
    t.is_infinity = true;
    return t;
  }
  t.A = Q.A();
  t.B = Q.B();
  t.C = Q.C();
  return t;
}

EDSTerm term(const Curve& E, const Point& P, long n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "index must be positive");
  return term_of(n, point_mul(E, n, P));
}

std::vector<Point> multiples(const Curve& E, const Point& P, long n_max) {
  if (n_max < 1) throw Error(ErrorCode::PreconditionViolated, "n_max must be positive");
  if (!on_curve(E, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
  std::vector<Point> out;
  out.reserve(n_max);
  Point Q = P;
  out.push_back(Q);
  for (long n = 2; n <= n_max; ++n) {
    Q = point_add(E, Q, P);
    out.push_back(Q);
  }
  return out;
}

std::vector<EDSTerm> sequence(const Curve& E, const Point& P, long n_max) {
  auto pts = multiples(E, P, n_max);
  std::vector<EDSTerm> out;
  out.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) out.push_back(term_of(static_cast<long>(i) + 1, pts[i]));
  return out;
}

ValuationTransfer valuation_transfer_check(const Isogeny& sigma, const Point& P, const mpz_class& p) {
  if (!tate_reduction(sigma.domain, p).is_minimal || !tate_reduction(sigma.codomain, p).is_minimal)
    throw Error(ErrorCode::NotMinimal, "model not minimal at " + p.get_str());
  if (!on_curve(sigma.domain, P)) throw Error(ErrorCode::PointNotOnCurve, P.to_string());
  Point Q = sigma.apply(P);
  ValuationTransfer r;
  r.v_BP = P.inf ? kInfiniteValuation : valuation(P.B(), p);
  r.v_BsP = Q.inf ? kInfiniteValuation : valuation(Q.B(), p);
  r.ok = r.v_BP <= r.v_BsP;
  if (r.ok && r.v_BP > 0 && !P.inf && !Q.inf)
    r.ok = r.v_BsP <= r.v_BP + valuation(mpz_class(sigma.degree), p);
  return r;
}

bool good_reduction_everywhere(const Curve& E, const Point& P) {
  if (P.inf) return true;
  for (const auto& p : bad_primes(E)) {
    if (mpz_divisible_p(P.B().get_mpz_t(), p.get_mpz_t())) continue;
    if (ayad_criterion(E, P, p) == Reduction::Singular) return false;
  }
  return true;
}

LinkCheck division_poly_link_check(const Isogeny& sigma, const Point& P, long prec) {
  if (!is_minimal(sigma.domain) || !is_minimal(sigma.codomain))
    throw Error(ErrorCode::NotMinimal, "link check needs minimal models");
  if (P.inf) throw Error(ErrorCode::IdentityPoint, "link check at O");
  mpq_class psq = sigma.psi_sq(P.x);
  if (psq == 0) throw Error(ErrorCode::KernelPoint, P.to_string());
  Point Q = sigma.apply(P);
  const long d = sigma.degree;
  mpz_class BP = P.B(), BQ = Q.B();
  LinkCheck r;
  r.exact_case = good_reduction_everywhere(sigma.domain, P);
  r.lhs = log_abs(BQ, prec);
  r.middle = d * log_abs(BP, prec) + log_abs(psq, prec) / 2;
  r.rhs_high = r.lhs + BigFloat::from_string("1.5", prec) * d * curve_height(sigma.domain, prec);
  if (r.exact_case) {
    // B_{sigma P}^2 = B_P^{2d} psi_sigma^2(P)
    mpz_class lhs2 = BQ * BQ;
    mpz_class bpow;
    mpz_pow_ui(bpow.get_mpz_t(), BP.get_mpz_t(), 2 * d);
    r.ok = mpq_class(lhs2) == bpow * abs(psq);
  } else {
    BigFloat slack = BigFloat::from_string("1e-30", prec);
    r.ok = r.lhs <= r.middle + slack && r.middle <= r.rhs_high + slack;
  }
  return r;
}

}  // namespace edslab
