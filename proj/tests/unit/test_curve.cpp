#include "doctest.h"
#include "edslab/curve.hpp"
#include "testing.hpp"

using namespace edslab;
using testing::oracle;

TEST_CASE("invariants match the oracle") {
  for (const auto& s : testing::fixture_points()) {
    CAPTURE(s.name);
    const auto& o = oracle()["curves"][s.name];
    CHECK(s.E.b2.get_str() == o["b2"].get<std::string>());
    CHECK(s.E.b4.get_str() == o["b4"].get<std::string>());
    CHECK(s.E.b6.get_str() == o["b6"].get<std::string>());
    CHECK(s.E.b8.get_str() == o["b8"].get<std::string>());
    CHECK(s.E.c4.get_str() == o["c4"].get<std::string>());
    CHECK(s.E.c6.get_str() == o["c6"].get<std::string>());
    CHECK(s.E.disc.get_str() == o["disc"].get<std::string>());
    CHECK(s.E.j.get_str() == o["j"].get<std::string>());
    CHECK(on_curve(s.E, s.P));
  }
}

TEST_CASE("curve construction errors") {
  CHECK(testing::error_of([] { curve_new(0, 0, 0, 0, 0); }) == ErrorCode::SingularCurve);
  CHECK(testing::error_of([] { curve_new(0, 0, 0, -3, 2); }) == ErrorCode::SingularCurve);
  CHECK(testing::error_of([] { curve_from_string("[0,0,1]"); }) == ErrorCode::ParseError);
  CHECK(testing::error_of([] { Point::parse("1;2"); }) == ErrorCode::ParseError);
  Curve E = curve_from_string("[0,0,1,-1,0]");
  CHECK(E.to_string() == "[0,0,1,-1,0]");
}

TEST_CASE("group law against the oracle sequence") {
  for (const auto& s : testing::fixture_points()) {
    CAPTURE(s.name);
    const auto& o = oracle()["curves"][s.name];
    Point Q = Point::infinity();
    for (int n = 1; n <= 30; ++n) {
      Q = point_add(s.E, Q, s.P);
      CHECK(Q.A().get_str() == o["A"][n - 1].get<std::string>());
      CHECK(Q.B().get_str() == o["B"][n - 1].get<std::string>());
      CHECK(on_curve(s.E, Q));
    }
    CHECK(point_mul(s.E, 30, s.P) == Q);
    CHECK(point_add(s.E, Q, point_neg(s.E, Q)).inf);
    CHECK(point_mul(s.E, -7, s.P) == point_neg(s.E, point_mul(s.E, 7, s.P)));
    CHECK(torsion_order(s.E, s.P) == 0);
  }
}

TEST_CASE("torsion orders") {
  Curve E25 = curve_from_string("[0,0,0,-25,0]");
  CHECK(torsion_order(E25, Point::parse("0,0")) == 2);
  CHECK(torsion_order(E25, Point::parse("5,0")) == 2);
  Curve E1 = curve_from_string("[0,0,0,0,1]");
  CHECK(torsion_order(E1, Point::parse("2,3")) == 6);
  CHECK(torsion_order(E1, Point::parse("0,1")) == 3);
  Curve E11 = curve_from_string("[0,-1,1,0,0]");
  CHECK(torsion_order(E11, Point::parse("0,0")) == 5);
}

TEST_CASE("reduction types and conductors") {
  struct Row {
    const char* name;
    const char* conductor;
    std::vector<std::string> kodaira;
  };
  std::vector<Row> rows{{"37a", "37", {"I1"}},          {"389a", "389", {"I1"}},
                        {"43a", "43", {"I1"}},          {"E_25", "800", {"III", "I0*"}},
                        {"E_12", "288", {"I3*", "III"}}, {"mordell_-2", "1728", {"II", "II"}}};
  auto samples = testing::fixture_points();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].name);
    ConductorReport c = conductor_and_szpiro(samples[i].E);
    CHECK(c.conductor.get_str() == rows[i].conductor);
    REQUIRE(c.local.size() == rows[i].kodaira.size());
    for (std::size_t k = 0; k < c.local.size(); ++k) CHECK(c.local[k].kodaira_string() == rows[i].kodaira[k]);
    BigFloat expect = log_abs(samples[i].E.disc, 192) / log_abs(c.conductor, 192);
    CHECK(testing::close(c.szpiro, expect, BigFloat::from_double(1e-40, 192)));
  }
}

TEST_CASE("Tate's algorithm on standard examples") {
  CHECK(tate_reduction(curve_from_string("[0,-1,1,0,0]"), 11).kodaira_string() == "I1");
  CHECK(tate_reduction(curve_from_string("[0,-1,1,-10,-20]"), 11).kodaira_string() == "I5");
  CHECK(tate_reduction(curve_from_string("[0,0,0,-1,0]"), 2).kodaira_string() == "III");
  CHECK(tate_reduction(curve_from_string("[0,0,0,0,1]"), 3).kodaira_string() == "III");
  CHECK(tate_reduction(curve_from_string("[0,0,0,0,1]"), 2).kodaira_string() == "IV");
  ReductionInfo r = tate_reduction(curve_from_string("[0,0,0,-1,0]"), 2);
  CHECK(r.conductor_exponent == 5);
  CHECK(r.ord_disc == 6);
}

TEST_CASE("minimal models") {
  // 11a3 scaled by u = 6 in short form.
  Curve big = curve_from_string("[0,0,0,-432,8208]");
  CHECK_FALSE(is_minimal(big));
  MinimalModel mm = minimal_model(big);
  CHECK(mm.curve.to_string() == "[0,-1,1,0,0]");
  CHECK(apply(mm.change, big) == mm.curve);
  CHECK(apply(mm.change.inverse(), mm.curve) == big);
  CHECK(bad_primes(big) == std::vector<mpz_class>{2, 3, 11});
  CHECK(bad_primes(mm.curve) == std::vector<mpz_class>{11});
  CHECK(testing::error_of([&] { conductor_and_szpiro(big); }) == ErrorCode::NotMinimal);

  Point P = Point::parse("-12,108");
  REQUIRE(on_curve(big, P));
  Point Q = mm.change.apply(P);
  CHECK(on_curve(mm.curve, Q));
  CHECK(mm.change.inverse().apply(Q) == P);

  Transform t{2, 1, 3, -1};
  Curve E = curve_from_string("[1,2,3,4,5]");
  Curve F = apply(t.then(t.inverse()), E);
  CHECK(F == E);
  for (const auto& s : testing::fixture_points()) CHECK(is_minimal(s.E));
}

TEST_CASE("rational model standardization") {
  std::array<mpq_class, 5> a{0, 0, 0, mpq_class(-25, 16), 0};
  MinimalModel mm = minimal_model(a);
  CHECK(mm.curve.j == 1728);
  CHECK(is_minimal(mm.curve));
  CHECK(mm.curve.standardized());
}
