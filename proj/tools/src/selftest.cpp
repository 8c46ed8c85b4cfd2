#include "selftest.hpp"

#include <functional>
#include <numeric>

#include "edslab/error.hpp"
#include "edslab/fixtures.hpp"

namespace edslab::cli {

namespace {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

Check strong_divisibility() {
  Check c{"strong_divisibility", true, ""};
  for (const auto& f : fixtures::kCurvePoints) {
    Curve E = curve_from_string(f.curve);
    auto seq = sequence(E, Point::parse(f.point), 24);
    for (long i = 1; i <= 24 && c.ok; ++i)
      for (long j = 1; j <= 24; ++j) {
        mpz_class g = gcd(seq[i - 1].B, seq[j - 1].B);
        if (g != seq[std::gcd(i, j) - 1].B) {
          c.ok = false;
          c.detail = std::string(f.name) + " n=" + std::to_string(i) + " m=" + std::to_string(j);
          break;
        }
      }
  }
  return c;
}

Check division_polynomials() {
  Check c{"division_polynomials", true, ""};
  for (const auto& f : fixtures::kCurvePoints) {
    Curve E = curve_from_string(f.curve);
    Point P = Point::parse(f.point);
    DivisionPolynomials dp(E);
    for (int n = 2; n <= 8; ++n) {
      Point Q = point_mul(E, n, P);
      if (Q.x * dp.psi_sq(n)(P.x) != dp.phi(n)(P.x)) {
        c.ok = false;
        c.detail = std::string(f.name) + " n=" + std::to_string(n);
        return c;
      }
    }
  }
  return c;
}

Check height_identity(long prec) {
  Check c{"isogeny_height_identity", true, ""};
  BigFloat tol = pow(BigFloat(2, prec), -(prec / 2));
  for (const auto& f : fixtures::kCurvePoints) {
    Curve E = curve_from_string(f.curve);
    BigFloat r = isogeny_height_identity_check(multiplication(E, 2), Point::parse(f.point), prec);
    if (!(r < tol)) {
      c.ok = false;
      c.detail = std::string(f.name) + " residual " + r.to_string(6);
    }
  }
  return c;
}

Check valuation_transfer() {
  Check c{"valuation_transfer", true, ""};
  Curve E = curve_from_string(fixtures::kMagnifiedCurve);
  Isogeny s = velu(E, Poly::parse(fixtures::kMagnifiedKernel));
  std::vector<Point> mp = multiples(E, Point::parse(fixtures::kMagnifiedPoint), 8);
  for (const auto& P : mp) {
    for (const auto& p : prime_divisors(s.apply(P).B())) {
      if (!valuation_transfer_check(s, P, p).ok) {
        c.ok = false;
        c.detail = "P=" + P.to_string() + " p=" + p.get_str();
        return c;
      }
    }
  }
  return c;
}

Check ea_tables() {
  Check c{"ea_reduction_table", true, ""};
  for (long A = 1; A <= 100; ++A) {
    std::vector<EAReduction> table;
    try {
      table = ea_reduction_table(A);
    } catch (const Error&) {
      continue;
    }
    Curve E = curve_new(0, 0, 0, -A, 0);
    for (const auto& r : table)
      if (tate_reduction(E, r.p).kodaira_string() != r.kodaira_string()) {
        c.ok = false;
        c.detail = "A=" + std::to_string(A) + " p=" + r.p.get_str();
        return c;
      }
  }
  return c;
}

Check bound_substitution(long prec) {
  Check c{"bound_substitution", true, ""};
  BigFloat one(1, prec);
  auto close = [&](const BigFloat& x, const char* expected) {
    BigFloat e = BigFloat::from_string(expected, prec);
    return abs(x - e) <= abs(e) * BigFloat::from_string("1e-12", prec);
  };
  Theorem12Bounds t = theorem12_bounds(one, one);
  BoundInputs in(prec);
  in.h_P = in.h_sigmaP = in.hE = in.hEprime = one;
  NonuniformBounds nb = nonuniform_bounds(in);
  c.ok = close(szpiro_constant(one), "2.56e14") && close(t.composite.value, "490000") && close(t.N3.value, "77") &&
         close(nb.first.value, "2.1e30") && close(nb.second.value, "4.2e30");
  if (!c.ok) c.detail = "a bound formula does not evaluate to its printed value";
  return c;
}

}  // namespace

json run_selftest(long prec) {
  std::vector<std::pair<std::string, std::function<Check()>>> suite{
      {"strong_divisibility", strong_divisibility},
      {"division_polynomials", division_polynomials},
      {"isogeny_height_identity", [prec] { return height_identity(prec); }},
      {"valuation_transfer", valuation_transfer},
      {"ea_reduction_table", ea_tables},
      {"bound_substitution", [prec] { return bound_substitution(prec); }}};
  json checks = json::array();
  bool ok = true;
  for (const auto& [name, run] : suite) {
    Check c{name, true, ""};
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    ok = ok && c.ok;
    checks.push_back(json{{"name", name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  return json{{"checks", checks}, {"ok", ok}};
}

}  // namespace edslab::cli
