#include "serialize.hpp"

#include <cmath>

namespace edslab::cli {

json to_json(const mpz_class& z) { return z.get_str(); }

json to_json(const mpq_class& q) { return q.get_str(); }

json to_json(const BigFloat& x) {
  int digits = static_cast<int>(std::ceil(x.precision() * 0.30102999566398120)) + 1;
  return json{{"decimal", x.to_string(digits)}, {"bits", x.precision()}};
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

json to_json(const Curve& E) { return E.to_string(); }

json to_json(const Point& P) { return P.to_string(); }

json to_json(const EDSTerm& t) {
  if (t.is_infinity) return json{{"n", t.n}, {"is_infinity", true}};
  return json{{"n", t.n}, {"A", to_json(t.A)}, {"B", to_json(t.B)}, {"C", to_json(t.C)}, {"is_infinity", false}};
}

json to_json(const Isogeny& s) {
  return json{{"domain", to_json(s.domain)},       {"codomain", to_json(s.codomain)},
              {"degree", s.degree},                {"kernel_poly", to_json(s.kernel_poly)},
              {"d_sigma", to_json(s.d_sigma)},     {"psi_sq", to_json(s.psi_sq)},
              {"phi", to_json(s.phi)}};
}

json to_json(const HeightReport& r) {
  json local = json::array();
  for (const auto& [p, v] : r.local_canonical) local.push_back(json{{"p", to_json(p)}, {"height", to_json(v)}});
  return json{{"torsion", r.torsion},
              {"naive_height", to_json(r.naive_h)},
              {"canonical_height", to_json(r.canonical_h)},
              {"archimedean", to_json(r.arch_canonical)},
              {"local", local},
              {"unfactored_local", to_json(r.unfactored_local)},
              {"curve_height", to_json(r.curve_h)},
              {"canonical_check", to_json(r.canonical_check)},
              {"check_multiple", r.check_multiple}};
}

json to_json(const BoundReport& r) {
  json branches = json::array();
  for (const auto& b : r.branches) branches.push_back(json{{"label", b.label}, {"value", to_json(b.value)}});
  return json{{"name", r.name}, {"value", to_json(r.value)}, {"meaning", meaning_name(r.meaning)}, {"branches", branches}};
}

json to_json(const FactorClassification& fc) {
  json factors = json::array();
  for (const auto& [p, e] : fc.known_factors) factors.push_back(json::array({to_json(p), e}));
  return json{{"B", to_json(fc.B)},
              {"known_factors", factors},
              {"cofactor", to_json(fc.cofactor)},
              {"cofactor_status", cofactor_status_name(fc.cofactor_status)}};
}

json to_json(const SieveRecord& r) {
  return json{{"n", r.n},
              {"class", to_json(r.class_P)},
              {"class_sigma", to_json(r.class_sigma)},
              {"new_prime_count", prime_count_name(r.new_primes_P)},
              {"new_prime_count_sigma", prime_count_name(r.new_primes_sigma)},
              {"new_prime_count_sigma_vs_S", prime_count_name(r.new_primes_sigma_S)},
              {"all_primes_in_S", r.all_primes_in_S},
              {"in_I", tristate_name(r.in_I)},
              {"divisibility_ok", r.divisibility_ok}};
}

json to_json(const ThueInstance& t) {
  return json{{"poly", to_json(t.form)}, {"degree", t.degree},     {"squared", t.squared},
              {"rhs", to_json(t.rhs)},   {"r", t.r},               {"rhs_bound", to_json(t.rhs_bound)}};
}

json to_json(const ThueReport& r) {
  json inst = json::array();
  for (const auto& t : r.instances) inst.push_back(to_json(t));
  return json{{"n", r.n},
              {"A", to_json(r.A)},
              {"B", to_json(r.B)},
              {"form_value", to_json(r.form_value)},
              {"value", r.value ? to_json(*r.value) : json(nullptr)},
              {"minimal_r", r.minimal_r ? json(*r.minimal_r) : json(nullptr)},
              {"matched", r.matched ? json(*r.matched) : json(nullptr)},
              {"rhs_bound", to_json(r.rhs_bound)},
              {"instances", inst}};
}

json to_json(const EACompositeReport& r) {
  return json{{"n", r.n},
              {"index", r.index},
              {"verdict", ea_verdict_name(r.verdict)},
              {"B", r.verdict == EAVerdict::OutsideRange ? json(nullptr) : to_json(r.B)},
              {"criteria", r.criteria}};
}

}  // namespace edslab::cli
